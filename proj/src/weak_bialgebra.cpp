#include "wba/weak_bialgebra.hpp"

#include "wba/errors.hpp"
#include "wba/hopf.hpp"

namespace wba {

namespace json = nlohmann;

Vector FinCoalgebra::coproduct(const Vector& x) const {
  Vector out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : comult[i]) out[t.left * dim + t.right] += x[i] * t.coeff;
  }
  return out;
}

void require_validated(const WeakBialgebra& h) {
  if (!h.validated) throw Error(ErrorCode::NotValidated, "weak bialgebra has not passed check_weak_bialgebra");
}

Vector tensor_apply(const Matrix& a, const Matrix& b, const Vector& t) {
  const std::size_t m = a.cols(), n = b.cols();
  Vector out(a.rows() * b.rows());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& c = t[i * n + j];
      if (c.is_zero()) continue;
      for (std::size_t p = 0; p < a.rows(); ++p) {
        if (a(p, i).is_zero()) continue;
        Scalar cp = c * a(p, i);
        for (std::size_t q = 0; q < b.rows(); ++q)
          if (!b(q, j).is_zero()) out[p * b.rows() + q] += cp * b(q, j);
      }
    }
  return out;
}

Vector flip(const Vector& t, std::size_t n) {
  Vector out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = t[i * n + j];
  return out;
}

Vector unit_coproduct(const WeakBialgebra& h) { return h.coalg.coproduct(h.alg.unit); }

bool is_cocommutative(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vector d = h.coalg.coproduct(h.alg.basis_vector(i));
    if (d != flip(d, n)) return false;
  }
  return true;
}

namespace {

void check_shape(const WeakBialgebra& h) {
  check_algebra_shape(h.alg);
  const std::size_t n = h.alg.dim;
  if (h.coalg.dim != n || h.coalg.comult.size() != n || h.coalg.counit.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "algebra and coalgebra dimensions differ");
  for (const auto& terms : h.coalg.comult)
    for (const auto& t : terms)
      if (t.left >= n || t.right >= n) throw Error(ErrorCode::DimensionMismatch, "comultiplication index out of range");
  if (h.antipode && (h.antipode->rows() != n || h.antipode->cols() != n))
    throw Error(ErrorCode::DimensionMismatch, "antipode matrix size");
}

// Delta (x) id and id (x) Delta applied to an element of H (x) H.
Vector delta_left(const FinCoalgebra& c, const Vector& t) {
  const std::size_t n = c.dim;
  Vector out(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = t[i * n + j];
      if (x.is_zero()) continue;
      for (const auto& term : c.comult[i]) out[(term.left * n + term.right) * n + j] += x * term.coeff;
    }
  return out;
}

Vector delta_right(const FinCoalgebra& c, const Vector& t) {
  const std::size_t n = c.dim;
  Vector out(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = t[i * n + j];
      if (x.is_zero()) continue;
      for (const auto& term : c.comult[j]) out[(i * n + term.left) * n + term.right] += x * term.coeff;
    }
  return out;
}

// (eps (x) id) and (id (x) eps) on H (x) H.
Vector counit_left(const FinCoalgebra& c, const Vector& t) {
  const std::size_t n = c.dim;
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!t[i * n + j].is_zero() && !c.counit[i].is_zero()) out[j] += t[i * n + j] * c.counit[i];
  return out;
}

Vector counit_right(const FinCoalgebra& c, const Vector& t) {
  const std::size_t n = c.dim;
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!t[i * n + j].is_zero() && !c.counit[j].is_zero()) out[i] += t[i * n + j] * c.counit[j];
  return out;
}

struct Terms {
  std::size_t left, right;
  Scalar coeff;
};

std::vector<Terms> nonzero_terms(const Vector& t, std::size_t n) {
  std::vector<Terms> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!t[i * n + j].is_zero()) out.push_back({i, j, t[i * n + j]});
  return out;
}

// eps(b_i b_j)
Matrix counit_pairing(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h.coalg.apply_counit(h.alg.product(i, j));
  return m;
}

json::ordered_json label_of(const WeakBialgebra& h, std::size_t i) { return h.basis()[i]; }

}  // namespace

Report check_weak_bialgebra(WeakBialgebra& h) {
  check_shape(h);
  h.validated = false;
  const std::size_t n = h.dim();
  const FinAlgebra& a = h.alg;
  const FinCoalgebra& c = h.coalg;
  Report rep = check_algebra(a);

  std::vector<Vector> cop(n);
  for (std::size_t i = 0; i < n; ++i) cop[i] = c.coproduct(a.basis_vector(i));

  json::ordered_json w;
  for (std::size_t i = 0; i < n; ++i)
    if (delta_left(c, cop[i]) != delta_right(c, cop[i])) {
      w = {{"basis", label_of(h, i)}};
      break;
    }
  rep.add("coalgebra.coassociative", w.is_null(), w);

  w = nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    Vector b = a.basis_vector(i);
    if (counit_left(c, cop[i]) != b || counit_right(c, cop[i]) != b) {
      w = {{"basis", label_of(h, i)}};
      break;
    }
  }
  rep.add("coalgebra.counital", w.is_null(), w);

  w = nullptr;
  for (std::size_t i = 0; i < n && w.is_null(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.coproduct(a.product(i, j)) != a.multiply2(cop[i], cop[j])) {
        w = {{"basis", {label_of(h, i), label_of(h, j)}}};
        break;
      }
  rep.add("bialgebra.comultiplication_multiplicative", w.is_null(), w);

  const Vector d1 = c.coproduct(a.unit);
  const auto units = nonzero_terms(d1, n);
  const Matrix ep = counit_pairing(h);

  // eps(a 1_1) eps(1_2 c) = eps(ac) = eps(a 1_2) eps(1_1 c)
  w = nullptr;
  for (std::size_t x = 0; x < n && w.is_null(); ++x)
    for (std::size_t z = 0; z < n; ++z) {
      Scalar first, second;
      for (const auto& t : units) {
        first += t.coeff * ep(x, t.left) * ep(t.right, z);
        second += t.coeff * ep(x, t.right) * ep(t.left, z);
      }
      if (first != ep(x, z) || second != ep(x, z)) {
        w = {{"basis", {label_of(h, x), label_of(h, z)}}};
        break;
      }
    }
  const bool unit_form = w.is_null();
  rep.add("counit.weak_multiplicativity", unit_form, w);

  if (n <= 12) {
    // eps(a b_1) eps(b_2 c) = eps(abc) = eps(a b_2) eps(b_1 c)
    w = nullptr;
    for (std::size_t x = 0; x < n && w.is_null(); ++x)
      for (std::size_t y = 0; y < n && w.is_null(); ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Scalar abc = c.apply_counit(a.multiply(a.product(x, y), a.basis_vector(z)));
          Scalar first, second;
          for (const auto& t : c.comult[y]) {
            first += t.coeff * ep(x, t.left) * ep(t.right, z);
            second += t.coeff * ep(x, t.right) * ep(t.left, z);
          }
          if (first != abc || second != abc) {
            w = {{"basis", {label_of(h, x), label_of(h, y), label_of(h, z)}}};
            break;
          }
        }
    rep.add("counit.weak_multiplicativity_triple_form", w.is_null(), w);
    rep.info()["counit_forms_agree"] = (w.is_null() == unit_form);
  }

  // (Delta(1) (x) 1)(1 (x) Delta(1)) = Delta^2(1) = (1 (x) Delta(1))(Delta(1) (x) 1)
  {
    Vector d2 = delta_left(c, d1);
    Vector l = kron(d1, a.unit), r = kron(a.unit, d1);
    bool first = a.multiply3(l, r) == d2, second = a.multiply3(r, l) == d2;
    json::ordered_json uw;
    if (!first) uw = "(Delta(1) (x) 1)(1 (x) Delta(1)) != Delta^2(1)";
    else if (!second) uw = "(1 (x) Delta(1))(Delta(1) (x) 1) != Delta^2(1)";
    rep.add("unit.weak_comultiplicativity", first && second, uw);
  }

  h.validated = rep.all_pass();
  return rep;
}

CounitalMaps counital_matrices(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  const Vector d1 = unit_coproduct(h);
  const auto units = nonzero_terms(d1, n);
  const Matrix ep = counit_pairing(h);
  CounitalMaps m{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n), {}};
  for (std::size_t col = 0; col < n; ++col)
    for (const auto& t : units) {
      m.piL(t.right, col) += t.coeff * ep(t.left, col);
      m.piR(t.left, col) += t.coeff * ep(col, t.right);
      m.piLbar(t.right, col) += t.coeff * ep(col, t.left);
      m.piRbar(t.left, col) += t.coeff * ep(t.right, col);
    }
  return m;
}

CounitalMaps counital_maps(const WeakBialgebra& h) {
  require_validated(h);
  CounitalMaps m = counital_matrices(h);
  m.report = weak_identity_suite(h, m);
  return m;
}

Report weak_identity_suite(const WeakBialgebra& h) {
  require_validated(h);
  return weak_identity_suite(h, counital_matrices(h));
}

namespace {

template <class F>
json::ordered_json first_single(const WeakBialgebra& h, F differs) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (differs(i)) return {{"basis", h.basis()[i]}};
  return nullptr;
}

template <class F>
json::ordered_json first_pair(const WeakBialgebra& h, F differs) {
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (differs(i, j)) return {{"basis", {h.basis()[i], h.basis()[j]}}};
  return nullptr;
}

}  // namespace

Report weak_identity_suite(const WeakBialgebra& h, const CounitalMaps& m) {
  require_validated(h);
  const std::size_t n = h.dim();
  const FinAlgebra& a = h.alg;
  const Matrix id = Matrix::identity(n, h.field());
  const Matrix &R = m.piR, &L = m.piL, &Rb = m.piRbar, &Lb = m.piLbar;
  Report rep;
  auto bv = [&](std::size_t i) { return a.basis_vector(i); };
  auto mul = [&](const Vector& x, const Vector& y) { return a.multiply(x, y); };

  {
    json::ordered_json w;
    const std::pair<const char*, const Matrix*> maps[] = {{"piR", &R}, {"piL", &L}, {"piRbar", &Rb}, {"piLbar", &Lb}};
    for (const auto& [name, p] : maps)
      if ((*p) * (*p) != *p) {
        w = {{"map", name}};
        break;
      }
    rep.add("counital.idempotent", w.is_null(), w);
  }
  {
    struct Row {
      const char* text;
      Matrix lhs, rhs;
    };
    const Row table[] = {
        {"piLbar piR = piLbar", Lb * R, Lb},   {"piRbar piL = piRbar", Rb * L, Rb},
        {"piR piLbar = piR", R * Lb, R},       {"piL piRbar = piL", L * Rb, L},
        {"piRbar piR = piR", Rb * R, R},       {"piLbar piL = piL", Lb * L, L},
        {"piR piRbar = piRbar", R * Rb, Rb},   {"piL piLbar = piLbar", L * Lb, Lb},
    };
    json::ordered_json w;
    for (const auto& row : table)
      if (row.lhs != row.rhs) {
        w = {{"identity", row.text}};
        break;
      }
    rep.add("counital.composition_table", w.is_null(), w);
  }
  {
    json::ordered_json w = first_pair(h, [&](std::size_t i, std::size_t j) {
      Vector r = R.column(i), l = L.column(j);
      return mul(r, l) != mul(l, r);
    });
    rep.add("counital.images_commute", w.is_null(), w);
  }

  const Vector d1 = unit_coproduct(h);
  {
    Vector a1 = tensor_apply(R, id, d1), a2 = tensor_apply(id, L, d1), a3 = flip(tensor_apply(L, R, d1), n);
    json::ordered_json w;
    if (a1 != d1) w = "Delta(1) != piR(1_1) (x) 1_2";
    else if (a2 != d1) w = "Delta(1) != 1_1 (x) piL(1_2)";
    else if (a3 != d1) w = "Delta(1) != piR(1_2) (x) piL(1_1)";
    rep.add("unit.coproduct_factorizations", w.is_null(), w);
  }
  {
    json::ordered_json w = first_pair(h, [&](std::size_t i, std::size_t j) {
      Vector x = bv(i), y = bv(j);
      return R.apply(mul(x, R.column(j))) != mul(R.column(i), R.column(j)) ||
             L.apply(mul(L.column(i), y)) != mul(L.column(i), L.column(j)) ||
             Rb.apply(mul(Rb.column(i), y)) != mul(Rb.column(i), Rb.column(j)) ||
             Lb.apply(mul(x, Lb.column(j))) != mul(Lb.column(i), Lb.column(j));
    });
    rep.add("counital.module_maps", w.is_null(), w);
  }
  {
    json::ordered_json w = first_single(h, [&](std::size_t i) {
      Vector x = bv(i), s1(n), s2(n), s3(n), s4(n);
      for (const auto& t : h.coalg.comult[i]) {
        axpy(s1, t.coeff, mul(bv(t.left), R.column(t.right)));
        axpy(s2, t.coeff, mul(L.column(t.left), bv(t.right)));
        axpy(s3, t.coeff, mul(Rb.column(t.right), bv(t.left)));
        axpy(s4, t.coeff, mul(bv(t.right), Lb.column(t.left)));
      }
      return s1 != x || s2 != x || s3 != x || s4 != x;
    });
    rep.add("counital.counit_properties", w.is_null(), w);
  }
  {
    json::ordered_json w = first_pair(h, [&](std::size_t i, std::size_t j) {
      Vector x = bv(i), y = bv(j), xy = a.product(i, j);
      return R.apply(mul(R.column(i), y)) != R.apply(xy) || L.apply(mul(x, L.column(j))) != L.apply(xy) ||
             Rb.apply(mul(x, Rb.column(j))) != Rb.apply(xy) || Lb.apply(mul(Lb.column(i), y)) != Lb.apply(xy);
    });
    rep.add("counital.product_rules", w.is_null(), w);
  }
  {
    const auto units = nonzero_terms(d1, n);
    json::ordered_json w = first_single(h, [&](std::size_t i) {
      Vector x = bv(i);
      Vector cop = h.coalg.coproduct(x);
      Vector lx = L.column(i), rx = R.column(i);
      Vector r1(n * n), r2(n * n), r3(n * n), r4(n * n);
      for (const auto& t : units) {
        axpy(r1, t.coeff, kron(mul(bv(t.left), x), bv(t.right)));
        axpy(r2, t.coeff, kron(mul(lx, bv(t.left)), bv(t.right)));
        axpy(r3, t.coeff, kron(mul(x, bv(t.left)), R.column(t.right)));
        axpy(r4, t.coeff, kron(bv(t.left), mul(rx, bv(t.right))));
      }
      return tensor_apply(id, L, cop) != r1 || h.coalg.coproduct(lx) != r2 || tensor_apply(id, R, cop) != r3 ||
             h.coalg.coproduct(rx) != r4;
    });
    rep.add("counital.coproduct_identities", w.is_null(), w);
  }
  if (h.antipode) rep.merge(antipode_identities(h, m, *h.antipode));
  rep.info()["cocommutative"] = is_cocommutative(h);
  return rep;
}

BaseAlgebra base_algebra(const WeakBialgebra& h) {
  require_validated(h);
  const std::size_t n = h.dim();
  const Field& f = h.field();
  CounitalMaps m = counital_matrices(h);
  SplitIdempotent sp = split_idempotent(m.piR);
  const std::size_t d = sp.inject.cols();
  BaseAlgebra out;
  out.inject = sp.inject;
  out.project = sp.project;
  out.columns = sp.columns;
  Report& rep = out.report;

  FinAlgebra& r = out.r.algebra;
  r.field = &f;
  r.dim = d;
  for (std::size_t k = 0; k < d; ++k) {
    Vector col = sp.inject.column(k);
    std::size_t c = sp.columns[k];
    r.basis.push_back(col == h.alg.basis_vector(c) ? h.basis()[c] : "piR(" + h.basis()[c] + ")");
  }
  const Matrix piR_check = sp.inject * sp.project;
  json::ordered_json w;
  r.mult.assign(d * d, Vector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector p = h.alg.multiply(sp.inject.column(i), sp.inject.column(j));
      if (w.is_null() && piR_check.apply(p) != p) w = {{"basis", {r.basis[i], r.basis[j]}}};
      r.mult[i * d + j] = sp.project.apply(p);
    }
  rep.add("base.closed_under_product", w.is_null(), w);
  const bool unit_in = piR_check.apply(h.alg.unit) == h.alg.unit;
  rep.add("base.contains_unit", unit_in, "1 is not in piR(H)");
  r.unit = sp.project.apply(h.alg.unit);

  const Vector d1 = unit_coproduct(h);
  const Matrix id = Matrix::identity(n, f);
  Vector e = tensor_apply(id, m.piR, d1);
  Vector e_r = tensor_apply(sp.project, sp.project, e);
  rep.add("base.frobenius_element_in_RxR", tensor_apply(sp.inject, sp.inject, e_r) == e,
          "1_1 (x) piR(1_2) is not in R (x) R");
  out.r.frob.psi.resize(d);
  for (std::size_t k = 0; k < d; ++k) out.r.frob.psi[k] = h.coalg.apply_counit(sp.inject.column(k));
  out.r.frob.frob = Matrix(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) out.r.frob.frob(p, q) = e_r[p * d + q];

  Report fr = check_separable_frobenius(r, out.r.frob);
  rep.merge(fr, "base.");
  out.piR_piL = sp.project * m.piR * m.piL * sp.inject;
  if (fr.find("frobenius.dual_bases")->pass) {
    out.nakayama = nakayama(r, out.r.frob);
    json::ordered_json nw;
    for (std::size_t k = 0; k < d && nw.is_null(); ++k)
      if (out.nakayama.theta.column(k) != out.piR_piL.column(k)) nw = {{"basis", r.basis[k]}};
    rep.add("base.nakayama_is_piR_piL", nw.is_null(), nw);
  } else {
    rep.fail("base.nakayama_is_piR_piL", "Frobenius structure on piR(H) is not dual");
  }
  rep.info()["nakayama_comparison"] = "on the image of piR only";
  rep.info()["dim"] = d;
  return out;
}

WeakBialgebra dual_wba(const WeakBialgebra& h) {
  require_validated(h);
  const std::size_t n = h.dim();
  const Field& f = h.field();
  WeakBialgebra d;
  d.alg.field = &f;
  d.alg.dim = n;
  d.alg.basis = h.basis();
  d.alg.mult.assign(n * n, Vector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& t : h.coalg.comult[r]) d.alg.mult[t.left * n + t.right][r] += t.coeff;
  d.alg.unit = h.coalg.counit;
  d.coalg.dim = n;
  d.coalg.comult.assign(n, {});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vector& prod = h.alg.product(p, q);
      for (std::size_t r = 0; r < n; ++r)
        if (!prod[r].is_zero()) d.coalg.comult[r].push_back({p, q, prod[r]});
    }
  d.coalg.counit = h.alg.unit;
  if (h.antipode) d.antipode = h.antipode->transpose();
  Report rep = check_weak_bialgebra(d);
  if (!rep.all_pass()) throw Error(ErrorCode::LawFailure, "dual fails the weak bialgebra axioms: " + rep.failures()[0]);
  return d;
}

Report is_wba_morphism(const Matrix& q, const WeakBialgebra& src, const WeakBialgebra& tgt) {
  require_validated(src);
  require_validated(tgt);
  if (&src.field() != &tgt.field()) throw Error(ErrorCode::FieldMismatch, "source and target fields differ");
  const std::size_t n = src.dim(), n2 = tgt.dim();
  if (q.rows() != n2 || q.cols() != n) throw Error(ErrorCode::DimensionMismatch, "morphism matrix size");
  CounitalMaps ms = counital_matrices(src), mt = counital_matrices(tgt);
  Report rep;
  auto bv = [&](std::size_t i) { return src.alg.basis_vector(i); };

  json::ordered_json w = first_single(src, [&](std::size_t i) {
    return tgt.coalg.coproduct(q.column(i)) != tensor_apply(q, q, src.coalg.coproduct(bv(i)));
  });
  rep.add("morphism.comultiplicative", w.is_null(), w);
  w = first_single(src, [&](std::size_t i) { return tgt.coalg.apply_counit(q.column(i)) != src.coalg.counit[i]; });
  rep.add("morphism.counital", w.is_null(), w);

  auto commute = [&](const Matrix& lhs, const Matrix& rhs) {
    return first_single(src, [&](std::size_t i) { return lhs.column(i) != rhs.column(i); });
  };
  w = commute(q * ms.piR, mt.piR * q);
  rep.add("morphism.commutes_with_piR", w.is_null(), w);
  w = commute(q * ms.piRbar, mt.piRbar * q);
  rep.add("morphism.commutes_with_piRbar", w.is_null(), w);
  w = commute(q * ms.piR * ms.piL, mt.piR * mt.piL * q);
  rep.add("morphism.commutes_with_piR_piL", w.is_null(), w);

  const auto units = nonzero_terms(unit_coproduct(src), n);
  w = first_pair(src, [&](std::size_t i, std::size_t j) {
    Vector lhs(n2);
    for (const auto& t : units) {
      Vector x = q.apply(src.alg.multiply(bv(i), bv(t.left)));
      Vector y = q.apply(src.alg.multiply(ms.piR.column(t.right), bv(j)));
      axpy(lhs, t.coeff, tgt.alg.multiply(x, y));
    }
    return lhs != q.apply(src.alg.product(i, j));
  });
  rep.add("morphism.weakly_multiplicative", w.is_null(), w);
  return rep;
}

}  // namespace wba
