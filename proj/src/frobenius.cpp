#include "wba/frobenius.hpp"

#include "wba/errors.hpp"

namespace wba {

namespace json = nlohmann;

namespace {

void check_shape(const FinAlgebra& r, const FrobeniusStructure& f) {
  check_algebra_shape(r);
  if (f.psi.size() != r.dim || f.frob.rows() != r.dim || f.frob.cols() != r.dim)
    throw Error(ErrorCode::DimensionMismatch, "Frobenius data does not match the algebra");
}

// sum_{p,q} F(p,q) left(b_p) (x) right(b_q), as an element of R (x) R.
template <class L, class Rt>
Vector tensor_image(const FinAlgebra& r, const Matrix& frob, L left, Rt right) {
  const std::size_t n = r.dim;
  Vector out(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (frob(p, q).is_zero()) continue;
      axpy(out, frob(p, q), kron(left(p), right(q)));
    }
  return out;
}

Matrix theta_matrix(const FinAlgebra& r, const FrobeniusStructure& f) {
  const std::size_t n = r.dim;
  Matrix t(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector col(n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        if (f.frob(p, q).is_zero()) continue;
        Scalar s = f.frob(p, q) * dot(f.psi, r.product(p, c));
        if (!s.is_zero()) col[q] += s;
      }
    t.set_column(c, col);
  }
  return t;
}

Matrix theta_inv_matrix(const FinAlgebra& r, const FrobeniusStructure& f) {
  const std::size_t n = r.dim;
  Matrix t(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector col(n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        if (f.frob(p, q).is_zero()) continue;
        Scalar s = f.frob(p, q) * dot(f.psi, r.product(c, q));
        if (!s.is_zero()) col[p] += s;
      }
    t.set_column(c, col);
  }
  return t;
}

json::ordered_json dual_bases_witness(const FinAlgebra& r, const FrobeniusStructure& f) {
  const std::size_t n = r.dim;
  for (std::size_t c = 0; c < n; ++c) {
    Vector lhs(n), rhs(n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        if (f.frob(p, q).is_zero()) continue;
        lhs[q] += f.frob(p, q) * dot(f.psi, r.product(c, p));
        rhs[p] += f.frob(p, q) * dot(f.psi, r.product(q, c));
      }
    if (lhs != r.basis_vector(c) || rhs != r.basis_vector(c)) return {{"basis", r.basis[c]}};
  }
  return nullptr;
}

}  // namespace

Report check_separable_frobenius(const FinAlgebra& r, const FrobeniusStructure& f) {
  check_shape(r, f);
  const std::size_t n = r.dim;
  Report rep = check_algebra(r);
  auto bv = [&](std::size_t i) { return r.basis_vector(i); };
  const Matrix& F = f.frob;

  json::ordered_json w = dual_bases_witness(r, f);
  rep.add("frobenius.dual_bases", w.is_null(), w);

  Matrix th = theta_matrix(r, f), thi = theta_inv_matrix(r, f);
  auto theta = [&](std::size_t i) { return th.column(i); };
  auto theta_inv = [&](std::size_t i) { return thi.column(i); };

  w = nullptr;
  for (std::size_t s = 0; s < n && w.is_null(); ++s)
    for (std::size_t c = 0; c < n; ++c)
      if (dot(f.psi, r.product(s, c)) != dot(f.psi, r.multiply(theta(c), bv(s)))) {
        w = {{"s", r.basis[s]}, {"r", r.basis[c]}};
        break;
      }
  rep.add("nakayama.twisted_trace", w.is_null(), w);

  w = nullptr;
  const Field& fld = *r.field;
  if (th * thi != Matrix::identity(n, fld) || thi * th != Matrix::identity(n, fld))
    w = "theta and theta_inv are not mutually inverse";
  else if (th.apply(r.unit) != r.unit)
    w = "theta(1) != 1";
  else
    for (std::size_t a = 0; a < n && w.is_null(); ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (th.apply(r.product(a, b)) != r.multiply(theta(a), theta(b))) {
          w = {{"basis", {r.basis[a], r.basis[b]}}};
          break;
        }
  rep.add("nakayama.automorphism", w.is_null(), w);

  auto first_failure = [&](auto&& lhs, auto&& rhs) -> json::ordered_json {
    for (std::size_t c = 0; c < n; ++c)
      if (lhs(c) != rhs(c)) return {{"basis", r.basis[c]}};
    return nullptr;
  };
  auto ident = [&](std::size_t q) { return bv(q); };

  // r e_i (x) f_i = e_i (x) f_i r
  w = first_failure(
      [&](std::size_t c) { return tensor_image(r, F, [&](std::size_t p) { return r.product(c, p); }, ident); },
      [&](std::size_t c) { return tensor_image(r, F, ident, [&](std::size_t q) { return r.product(q, c); }); });
  rep.add("frobenius.element_balanced", w.is_null(), w);

  // e_i r (x) f_i = e_i (x) theta(r) f_i
  w = first_failure(
      [&](std::size_t c) { return tensor_image(r, F, [&](std::size_t p) { return r.product(p, c); }, ident); },
      [&](std::size_t c) {
        return tensor_image(r, F, ident, [&](std::size_t q) { return r.multiply(theta(c), bv(q)); });
      });
  rep.add("frobenius.element_twisted", w.is_null(), w);

  // e_i (x) theta(f_i) = theta^{-1}(e_i) (x) f_i
  {
    Vector lhs = tensor_image(r, F, ident, theta);
    Vector rhs = tensor_image(r, F, theta_inv, ident);
    rep.add("frobenius.nakayama_exchange", lhs == rhs, "e_i (x) theta(f_i) differs");
  }
  // theta(e_i) (x) f_i = f_i (x) e_i = e_i (x) theta^{-1}(f_i)
  {
    Vector a = tensor_image(r, F, theta, ident);
    Vector flip(n * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) flip[q * n + p] = F(p, q);
    Vector c = tensor_image(r, F, ident, theta_inv);
    json::ordered_json fw;
    if (a != flip) fw = "theta(e_i) (x) f_i != f_i (x) e_i";
    else if (flip != c) fw = "f_i (x) e_i != e_i (x) theta^{-1}(f_i)";
    rep.add("frobenius.nakayama_flip", fw.is_null(), fw);
  }
  // a_i b_i = 1
  {
    Vector prod(n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (!F(p, q).is_zero()) axpy(prod, F(p, q), r.product(p, q));
    rep.add("separability.normalized", prod == r.unit, json::ordered_json{{"a_i b_i", [&] {
              std::vector<std::string> s;
              for (auto& x : prod) s.push_back(x.str());
              return s;
            }()}});
  }
  // a_i a_j (x) b_j b_i = a_i (x) b_i
  {
    Vector lhs(n * n), e(n * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        if (F(p, q).is_zero()) continue;
        e[p * n + q] = F(p, q);
        for (std::size_t p2 = 0; p2 < n; ++p2)
          for (std::size_t q2 = 0; q2 < n; ++q2) {
            if (F(p2, q2).is_zero()) continue;
            axpy(lhs, F(p, q) * F(p2, q2), kron(r.product(p, p2), r.product(q2, q)));
          }
      }
    rep.add("separability.idempotent", lhs == e, "a_i a_j (x) b_j b_i != a_i (x) b_i");
  }
  return rep;
}

NakayamaMap nakayama(const FinAlgebra& r, const FrobeniusStructure& f) {
  check_shape(r, f);
  json::ordered_json w = dual_bases_witness(r, f);
  if (!w.is_null()) throw Error(ErrorCode::NotFrobenius, "psi and e are not dual: " + w.dump());
  NakayamaMap m{theta_matrix(r, f), theta_inv_matrix(r, f)};
  const Matrix id = Matrix::identity(r.dim, *r.field);
  if (m.theta * m.theta_inv != id) throw Error(ErrorCode::NotFrobenius, "theta theta^{-1} != id");
  for (std::size_t s = 0; s < r.dim; ++s)
    for (std::size_t c = 0; c < r.dim; ++c)
      if (dot(f.psi, r.product(s, c)) != dot(f.psi, r.multiply(m.theta.column(c), r.basis_vector(s))))
        throw Error(ErrorCode::NotFrobenius, "psi(sr) != psi(theta(r)s)");
  return m;
}

std::size_t nakayama_ambiguity(const FinAlgebra& r, const Vector& psi) {
  const std::size_t n = r.dim;
  // Unknown X(m, c) at index m*n + c; equation (c, s): sum_m X(m,c) psi(b_m b_s) = 0.
  Matrix sys(n * n, n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t m = 0; m < n; ++m) sys(c * n + s, m * n + c) = dot(psi, r.product(m, s));
  return kernel_basis(sys).size();
}

bool separability_idempotent_exists(const FinAlgebra& r) {
  const std::size_t n = r.dim, n2 = n * n;
  // Unknown e(p,q) at p*n + q. Equations: (b_c (x) 1) e - e (1 (x) b_c) = 0 and mu(e) = 1.
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix block(n2, n2);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Vector col = sub(kron(r.product(c, p), r.basis_vector(q)), kron(r.basis_vector(p), r.product(q, c)));
        block.set_column(p * n + q, col);
      }
    for (std::size_t i = 0; i < n2; ++i) {
      rows.push_back(block.row(i));
      rhs.emplace_back();
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    Vector row(n2);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) row[p * n + q] = r.product(p, q)[k];
    rows.push_back(row);
    rhs.push_back(r.unit[k]);
  }
  return solve_affine(Matrix::from_rows(rows, n2), rhs).consistent;
}

namespace {

FinAlgebra diagonal_algebra(std::size_t k) {
  const Field& q = Field::Q();
  FinAlgebra a;
  a.dim = k;
  for (std::size_t i = 0; i < k; ++i) a.basis.push_back("e" + std::to_string(i + 1));
  a.mult.assign(k * k, Vector(k));
  for (std::size_t i = 0; i < k; ++i) a.mult[i * k + i] = unit_vector(k, i, q);
  a.unit = Vector(k, Scalar(q, 1));
  return a;
}

FinAlgebra matrix_algebra2() {
  const Field& q = Field::Q();
  FinAlgebra a;
  a.dim = 4;
  a.basis = {"E11", "E12", "E21", "E22"};
  a.mult.assign(16, Vector(4));
  // E_ij E_kl = delta_jk E_il, index of E_ij is 2i + j.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) a.mult[(2 * i + j) * 4 + (2 * j + l)] = unit_vector(4, 2 * i + l, q);
  a.unit = Vector(4);
  a.unit[0] = Scalar(q, 1);
  a.unit[3] = Scalar(q, 1);
  return a;
}

}  // namespace

std::vector<std::string> builtin_frobenius_names() {
  return {"Q", "QxQ", "QxQxQ", "GroupZ2", "Mat2", "Mat2twist"};
}

FrobeniusAlgebra builtin_frobenius(const std::string& name) {
  const Field& q = Field::Q();
  FrobeniusAlgebra out;
  if (name == "Q" || name == "QxQ" || name == "QxQxQ") {
    std::size_t k = name == "Q" ? 1 : (name == "QxQ" ? 2 : 3);
    out.algebra = diagonal_algebra(k);
    if (k == 1) out.algebra.basis = {"1"};
    out.frob.psi = Vector(k, Scalar(q, 1));
    out.frob.frob = Matrix::identity(k, q);
  } else if (name == "GroupZ2") {
    FinAlgebra& a = out.algebra;
    a.dim = 2;
    a.basis = {"1", "g"};
    a.mult = {unit_vector(2, 0, q), unit_vector(2, 1, q), unit_vector(2, 1, q), unit_vector(2, 0, q)};
    a.unit = unit_vector(2, 0, q);
    out.frob.psi = {Scalar(q, 2), Scalar()};
    out.frob.frob = scale(Scalar(q, 1, 2), Matrix::identity(2, q));
  } else if (name == "Mat2" || name == "Mat2twist") {
    out.algebra = matrix_algebra2();
    // psi = tr(D .), e = sum E_ij (x) D^{-1} E_ji; tr(D^{-1}) must be 1.
    Scalar d1 = name == "Mat2" ? Scalar(q, 2) : Scalar(q, 3);
    Scalar d2 = name == "Mat2" ? Scalar(q, 2) : Scalar(q, 3, 2);
    out.frob.psi = {d1, Scalar(), Scalar(), d2};
    Matrix f(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) f(2 * i + j, 2 * j + i) = (j == 0 ? d1 : d2).inverse();
    out.frob.frob = f;
  } else {
    throw Error(ErrorCode::UnknownName, "unknown Frobenius builtin '" + name + "'");
  }
  return out;
}

}  // namespace wba
