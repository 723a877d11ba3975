#pragma once

// Dense exact matrices and the linear algebra used throughout the library.

#include <cstddef>
#include <optional>
#include <vector>

#include "wba/scalar.hpp"

namespace wba {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i, const Field& f);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
void axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x
Scalar dot(const Vector& a, const Vector& b);
// a (x) b with index i*|b| + j.
Vector kron(const Vector& a, const Vector& b);
const Field* field_of(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n, const Field& f);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_column(std::size_t j, const Vector& v);
  Matrix transpose() const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;
  Scalar trace() const;
  const Field* field() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix scale(const Scalar& c, const Matrix& m);

// Reduced row echelon form with pivot columns. Elimination is fraction-free
// (Bareiss-style cross multiplication, first nonzero pivot) followed by a
// final normalisation of the pivot rows.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);

struct AffineSolution {
  bool consistent = false;
  Vector particular;
  std::vector<Vector> homogeneous;
};
AffineSolution solve_affine(const Matrix& a, const Vector& b);

// Throws DivisionByZero when singular, DimensionMismatch when not square.
Matrix inverse(const Matrix& m);

// Coordinates of v in the column basis `basis` (full column rank), or nullopt
// when v is outside the span.
std::optional<Vector> solve_in_span(const Matrix& basis, const Vector& v);

struct SplitIdempotent {
  Matrix inject;   // n x r, columns are selected columns of E
  Matrix project;  // r x n
  std::vector<std::size_t> columns;  // which columns of E were selected
};
// Throws NotIdempotent unless E*E == E.
SplitIdempotent split_idempotent(const Matrix& e);

// Characteristic polynomial det(xI - A), coefficient of x^k at index k.
std::vector<Scalar> characteristic_polynomial(const Matrix& a);

}  // namespace wba
