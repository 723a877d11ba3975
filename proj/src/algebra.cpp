#include "wba/algebra.hpp"

#include <numeric>

#include "wba/errors.hpp"

namespace wba {

namespace json = nlohmann;

void check_algebra_shape(const FinAlgebra& a) {
  if (a.basis.size() != a.dim || a.mult.size() != a.dim * a.dim || a.unit.size() != a.dim)
    throw Error(ErrorCode::DimensionMismatch, "algebra structure constants do not match dim");
  for (const auto& v : a.mult)
    if (v.size() != a.dim) throw Error(ErrorCode::DimensionMismatch, "product vector length");
}

Vector FinAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector r(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      axpy(r, x[i] * y[j], product(i, j));
    }
  }
  return r;
}

Matrix FinAlgebra::left_matrix(const Vector& x) const {
  Matrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_column(j, multiply(x, basis_vector(j)));
  return m;
}

Matrix FinAlgebra::right_matrix(const Vector& x) const {
  Matrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_column(j, multiply(basis_vector(j), x));
  return m;
}

Vector FinAlgebra::multiply2(const Vector& s, const Vector& t) const {
  const std::size_t n = dim;
  Vector r(n * n);
  for (std::size_t a = 0; a < n * n; ++a) {
    if (s[a].is_zero()) continue;
    for (std::size_t b = 0; b < n * n; ++b) {
      if (t[b].is_zero()) continue;
      Scalar c = s[a] * t[b];
      const Vector& left = product(a / n, b / n);
      const Vector& right = product(a % n, b % n);
      for (std::size_t i = 0; i < n; ++i) {
        if (left[i].is_zero()) continue;
        Scalar ci = c * left[i];
        for (std::size_t j = 0; j < n; ++j)
          if (!right[j].is_zero()) r[i * n + j] += ci * right[j];
      }
    }
  }
  return r;
}

Vector FinAlgebra::multiply3(const Vector& s, const Vector& t) const {
  const std::size_t n = dim, n2 = n * n;
  Vector r(n2 * n);
  for (std::size_t a = 0; a < n2 * n; ++a) {
    if (s[a].is_zero()) continue;
    for (std::size_t b = 0; b < n2 * n; ++b) {
      if (t[b].is_zero()) continue;
      Scalar c = s[a] * t[b];
      const Vector& p0 = product(a / n2, b / n2);
      const Vector& p1 = product((a / n) % n, (b / n) % n);
      const Vector& p2 = product(a % n, b % n);
      for (std::size_t i = 0; i < n; ++i) {
        if (p0[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (p1[j].is_zero()) continue;
          Scalar cij = c * p0[i] * p1[j];
          for (std::size_t k = 0; k < n; ++k)
            if (!p2[k].is_zero()) r[i * n2 + j * n + k] += cij * p2[k];
        }
      }
    }
  }
  return r;
}

Report check_algebra(const FinAlgebra& a) {
  check_algebra_shape(a);
  Report rep;
  json::ordered_json assoc_w;
  for (std::size_t i = 0; i < a.dim && assoc_w.is_null(); ++i)
    for (std::size_t j = 0; j < a.dim && assoc_w.is_null(); ++j)
      for (std::size_t l = 0; l < a.dim; ++l) {
        Vector lhs = a.multiply(a.product(i, j), a.basis_vector(l));
        Vector rhs = a.multiply(a.basis_vector(i), a.product(j, l));
        if (lhs != rhs) {
          assoc_w = {{"basis", {a.basis[i], a.basis[j], a.basis[l]}}};
          break;
        }
      }
  rep.add("algebra.associative", assoc_w.is_null(), assoc_w);
  json::ordered_json unit_w;
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vector b = a.basis_vector(i);
    if (a.multiply(a.unit, b) != b || a.multiply(b, a.unit) != b) {
      unit_w = {{"basis", a.basis[i]}};
      break;
    }
  }
  rep.add("algebra.unital", unit_w.is_null(), unit_w);
  return rep;
}

bool SpanBuilder::add(const Vector& v0) {
  Vector v = reduce(v0);
  std::size_t p = n_;
  for (std::size_t i = 0; i < n_; ++i)
    if (!v[i].is_zero()) {
      p = i;
      break;
    }
  if (p == n_) return false;
  v = scale(v[p].inverse(), v);
  for (auto& b : basis_) {
    Scalar c = b[p];
    if (!c.is_zero()) axpy(b, -c, v);
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Vector SpanBuilder::reduce(const Vector& v0) const {
  Vector v = v0;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Scalar c = v[pivots_[k]];
    if (!c.is_zero()) axpy(v, -c, basis_[k]);
  }
  return v;
}

bool SpanBuilder::contains(const Vector& v) const { return is_zero(reduce(v)); }

namespace {

using SPoly = std::vector<Scalar>;

void trim(SPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

SPoly smul(const SPoly& a, const SPoly& b) {
  if (a.empty() || b.empty()) return {};
  SPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Scalar seval(const SPoly& p, const Scalar& x) {
  Scalar acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

SPoly sdeflate(const SPoly& p, const Scalar& r) {
  SPoly q(p.size() - 1);
  Scalar carry;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

QPoly to_rational(const SPoly& p) {
  QPoly q;
  for (const auto& c : p) q.push_back(c.rational());
  qpoly::trim(q);
  return q;
}

}  // namespace

FieldRoots field_roots(const std::vector<Scalar>& poly, const Field& f) {
  SPoly p = poly;
  trim(p);
  if (p.empty()) throw Error(ErrorCode::ZeroPolynomial, "field_roots of the zero polynomial");
  FieldRoots out;
  const int deg = static_cast<int>(p.size()) - 1;
  std::vector<Scalar> candidates;
  if (f.kind() == Field::Kind::Rationals) {
    for (const auto& r : rational_roots(to_rational(p))) candidates.emplace_back(f, r);
  } else {
    const int n = f.order();
    std::vector<long> units;
    for (long k = 1; k <= n; ++k)
      if (std::gcd(k, static_cast<long>(n)) == 1) units.push_back(k);
    for (long j = 0; j < n; ++j) {
      // q_j(x) = p(zeta^j x), then its norm down to Q.
      SPoly qj(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) qj[k] = p[k] * Scalar::zeta(f, j * static_cast<long>(k));
      SPoly norm{Scalar(f, 1)};
      for (long k : units) {
        SPoly conj(qj.size());
        for (std::size_t i = 0; i < qj.size(); ++i) conj[i] = qj[i].galois(k);
        norm = smul(norm, conj);
      }
      for (const auto& r : rational_roots(to_rational(norm)))
        candidates.push_back(Scalar(f, r) * Scalar::zeta(f, j));
    }
  }
  int total = 0;
  for (const auto& c : candidates) {
    bool seen = false;
    for (const auto& r : out.roots)
      if (r == c) seen = true;
    if (seen) continue;
    int m = 0;
    SPoly q = p;
    while (q.size() > 1 && seval(q, c).is_zero()) {
      q = sdeflate(q, c);
      ++m;
    }
    if (m == 0) continue;
    out.roots.push_back(c);
    out.multiplicity.push_back(m);
    total += m;
  }
  out.splits = (total == deg);
  return out;
}

namespace {

struct CharacterRecursion {
  const FinAlgebra& a;
  std::vector<Matrix> ops;  // ops[i] acts on functionals: (lambda o L_{b_i})
  CharacterSearch result;

  void run(const Matrix& basis) {
    const std::size_t d = basis.cols();
    if (d == 0) return;
    const Field& f = *a.field;
    Matrix bt = basis.transpose();
    std::vector<std::size_t> rows = row_echelon(bt).pivots;
    Matrix linv = inverse(basis.select_rows(rows));
    for (const auto& op : ops) {
      Matrix image = op * basis;
      Matrix x = linv * image.select_rows(rows);
      if (basis * x != image) throw Error(ErrorCode::LawFailure, "character subspace not invariant");
      Scalar c = x(0, 0);
      if (x == scale(c, Matrix::identity(d, f))) continue;
      FieldRoots roots = field_roots(characteristic_polynomial(x), f);
      if (!roots.splits) result.every_polynomial_split = false;
      for (const auto& ev : roots.roots) {
        Matrix shifted = x - scale(ev, Matrix::identity(d, f));
        std::vector<Vector> ker = kernel_basis(shifted);
        run(basis * Matrix::from_columns(ker, d));
      }
      return;
    }
    // Every operator is scalar here; a common eigenspace of characters is a line.
    if (d != 1) throw Error(ErrorCode::LawFailure, "common eigenspace of dimension > 1");
    Vector lambda = basis.column(0);
    Scalar at_unit = dot(lambda, a.unit);
    if (at_unit.is_zero()) return;
    lambda = scale(at_unit.inverse(), lambda);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        if (dot(lambda, a.product(i, j)) != lambda[i] * lambda[j]) return;
    result.characters.push_back(std::move(lambda));
  }
};

}  // namespace

CharacterSearch find_characters(const FinAlgebra& a) {
  check_algebra_shape(a);
  const std::size_t n = a.dim;
  // Two-sided ideal generated by commutators.
  SpanBuilder ideal(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ideal.add(sub(a.product(i, j), a.product(j, i)));
  bool grew = ideal.dimension() > 0;
  while (grew) {
    grew = false;
    std::vector<Vector> snapshot = ideal.basis();
    for (const auto& v : snapshot)
      for (std::size_t k = 0; k < n; ++k) {
        grew |= ideal.add(a.multiply(a.basis_vector(k), v));
        grew |= ideal.add(a.multiply(v, a.basis_vector(k)));
      }
  }
  Matrix start;
  if (ideal.dimension() == 0) {
    start = Matrix::identity(n, *a.field);
  } else {
    std::vector<Vector> ann = kernel_basis(Matrix::from_rows(ideal.basis(), n));
    start = Matrix::from_columns(ann, n);
  }
  CharacterRecursion rec{a, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Matrix t(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(j, k) = a.product(i, j)[k];
    rec.ops.push_back(std::move(t));
  }
  rec.run(start);
  return rec.result;
}

}  // namespace wba
