#include "wba/matrix.hpp"

#include <algorithm>

#include "wba/errors.hpp"

namespace wba {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i, const Field& f) {
  Vector v(n);
  v[i] = Scalar(f, 1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector add");
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sub");
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = c * v[i];
  return r;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

const Field* field_of(const Vector& v) {
  for (const auto& s : v)
    if (s.field()) return s.field();
  return nullptr;
}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "from_rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != r_) throw Error(ErrorCode::DimensionMismatch, "set_column");
  for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), c_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < c_; ++j) m(k, j) = (*this)(idx[k], j);
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != c_) throw Error(ErrorCode::DimensionMismatch, "matrix apply");
  Vector r(r_);
  for (std::size_t j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < r_; ++i) {
      const Scalar& x = (*this)(i, j);
      if (!x.is_zero()) r[i] += x * v[j];
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

const Field* Matrix::field() const {
  for (const auto& s : a_)
    if (s.field()) return s.field();
  return nullptr;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i) {
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i)
    if (!b.a_[i].is_zero()) m.a_[i] += b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i)
    if (!b.a_[i].is_zero()) m.a_[i] -= b.a_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return m;
}

Matrix scale(const Scalar& c, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = c * m(i, j);
  return r;
}

Echelon row_echelon(const Matrix& m0) {
  Matrix m = m0;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  Scalar prev;  // previous pivot; "one" before the first step
  bool have_prev = false;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = prow; i < rows; ++i)
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != prow)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(prow, j));
    const Scalar p = m(prow, col);
    for (std::size_t i = prow + 1; i < rows; ++i) {
      const Scalar f = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        Scalar v = p * m(i, j);
        if (!f.is_zero() && !m(prow, j).is_zero()) v -= f * m(prow, j);
        if (have_prev && !v.is_zero()) v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, col) = Scalar();
    }
    prev = p;
    have_prev = true;
    pivots.push_back(col);
    ++prow;
  }
  // Normalise pivot rows and clear above each pivot.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    const Scalar inv = m(k, pc).inverse();
    for (std::size_t j = pc; j < cols; ++j)
      if (!m(k, j).is_zero()) m(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar f = m(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < cols; ++j)
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
    }
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

namespace {

std::vector<Vector> kernel_from_echelon(const Echelon& e, std::size_t ncols, const Field& f) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    Vector v(ncols);
    v[fc] = Scalar(f, 1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      const Scalar& x = e.reduced(k, fc);
      if (!x.is_zero()) v[e.pivots[k]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

const Field& field_or_q(const Matrix& m) {
  const Field* f = m.field();
  return f ? *f : Field::Q();
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) {
  return kernel_from_echelon(row_echelon(m), m.cols(), field_or_q(m));
}

AffineSolution solve_affine(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_affine");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Field* fp = aug.field();
  const Field& f = fp ? *fp : Field::Q();
  Echelon e = row_echelon(aug);
  AffineSolution s;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return s;
  s.consistent = true;
  s.particular = Vector(a.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) s.particular[e.pivots[k]] = e.reduced(k, a.cols());
  Echelon ea{e.reduced, e.pivots};
  for (auto& v : kernel_from_echelon(ea, a.cols() + 1, f)) {
    if (!v[a.cols()].is_zero()) continue;  // the augmented column is never a free unknown
    v.pop_back();
    s.homogeneous.push_back(std::move(v));
  }
  return s;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const Field& f = field_or_q(m);
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(f, 1);
  }
  Echelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::DivisionByZero, "singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve_in_span(const Matrix& basis, const Vector& v) {
  AffineSolution s = solve_affine(basis, v);
  if (!s.consistent) return std::nullopt;
  if (!s.homogeneous.empty())
    throw Error(ErrorCode::DimensionMismatch, "solve_in_span: basis is not independent");
  return s.particular;
}

SplitIdempotent split_idempotent(const Matrix& e) {
  const std::size_t n = e.rows();
  if (e.cols() != n) throw Error(ErrorCode::DimensionMismatch, "split_idempotent needs a square matrix");
  if (e * e != e) throw Error(ErrorCode::NotIdempotent, "E*E != E");
  // For an idempotent in characteristic zero the trace is the rank.
  Scalar tr = e.trace();
  mpq_class t = tr.rational();
  if (t < 0 || t.get_den() != 1) throw Error(ErrorCode::NotIdempotent, "trace is not a rank");
  const std::size_t r = t.get_num().get_ui();

  // Incremental fully-reduced echelon basis of the column space.
  std::vector<Vector> ech;
  std::vector<std::size_t> pivot_rows, chosen;
  for (std::size_t j = 0; j < n && chosen.size() < r; ++j) {
    Vector v = e.column(j);
    for (std::size_t k = 0; k < ech.size(); ++k) {
      Scalar c = v[pivot_rows[k]];
      if (!c.is_zero()) axpy(v, -c, ech[k]);
    }
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) {
        p = i;
        break;
      }
    if (p == n) continue;
    v = scale(v[p].inverse(), v);
    for (std::size_t k = 0; k < ech.size(); ++k) {
      Scalar c = ech[k][p];
      if (!c.is_zero()) axpy(ech[k], -c, v);
    }
    ech.push_back(std::move(v));
    pivot_rows.push_back(p);
    chosen.push_back(j);
  }
  if (chosen.size() != r) throw Error(ErrorCode::NotIdempotent, "rank does not match trace");
  SplitIdempotent s;
  s.columns = chosen;
  s.inject = e.select_columns(chosen);
  if (r == 0) {
    s.project = Matrix(0, n);
    return s;
  }
  s.project = inverse(s.inject.select_rows(pivot_rows)) * e.select_rows(pivot_rows);
  return s;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial");
  const Field& f = field_or_q(a);
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(f, 1);
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Scalar t = (a * mk).trace();
    c[n - k] = -(t * Scalar(f, 1, static_cast<long>(k)));
  }
  return c;
}

}  // namespace wba
