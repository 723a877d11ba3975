#pragma once

// Finite-dimensional algebras given by structure constants, and their
// characters (algebra maps to the ground field).

#include <string>
#include <vector>

#include "wba/matrix.hpp"
#include "wba/report.hpp"

namespace wba {

struct FinAlgebra {
  const Field* field = &Field::Q();
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Vector> mult;  // mult[i*dim + j] = b_i b_j
  Vector unit;

  const Vector& product(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }
  Vector basis_vector(std::size_t i) const { return unit_vector(dim, i, *field); }
  Vector multiply(const Vector& x, const Vector& y) const;
  Matrix left_matrix(const Vector& x) const;   // y -> x y
  Matrix right_matrix(const Vector& x) const;  // y -> y x
  // Product in A (x) A, elements indexed i*dim + j.
  Vector multiply2(const Vector& s, const Vector& t) const;
  // Product in A (x) A (x) A.
  Vector multiply3(const Vector& s, const Vector& t) const;
};

Report check_algebra(const FinAlgebra& a);
// Throws DimensionMismatch on malformed structure-constant arrays.
void check_algebra_shape(const FinAlgebra& a);

// Roots of a polynomial with coefficients in f that are reachable exactly:
// rational roots over Q; over Q(zeta_N) the candidates r*zeta^j with r a
// rational root of the norm of p(zeta^j x). Distinct roots with multiplicity.
struct FieldRoots {
  std::vector<Scalar> roots;
  std::vector<int> multiplicity;
  bool splits = false;  // multiplicities add up to the degree
};
FieldRoots field_roots(const std::vector<Scalar>& poly, const Field& f);

// All characters chi: A -> k found by simultaneous eigenvectors of the
// transposed multiplication operators on the dual of A/[A,A].
struct CharacterSearch {
  std::vector<Vector> characters;  // chi as the vector (chi(b_i))_i
  bool every_polynomial_split = true;
};
CharacterSearch find_characters(const FinAlgebra& a);

// Incrementally maintained fully reduced echelon basis of a subspace.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient) : n_(ambient) {}
  // Returns true when v enlarged the span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  Vector reduce(const Vector& v) const;
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

 private:
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wba
