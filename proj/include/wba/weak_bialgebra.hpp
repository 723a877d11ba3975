#pragma once

// Weak bialgebras given by structure constants.

#include <optional>

#include "wba/algebra.hpp"
#include "wba/frobenius.hpp"

namespace wba {

struct CoTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

struct FinCoalgebra {
  std::size_t dim = 0;
  std::vector<std::vector<CoTerm>> comult;  // Delta(b_i) = sum coeff b_left (x) b_right
  Vector counit;

  // Delta(x) in H (x) H, index left*dim + right.
  Vector coproduct(const Vector& x) const;
  Scalar apply_counit(const Vector& x) const { return dot(counit, x); }
};

struct WeakBialgebra {
  FinAlgebra alg;
  FinCoalgebra coalg;
  bool validated = false;           // set by check_weak_bialgebra only
  std::optional<Matrix> antipode;   // attached by the hopf module or by input

  std::size_t dim() const { return alg.dim; }
  const Field& field() const { return *alg.field; }
  const std::vector<std::string>& basis() const { return alg.basis; }
};

// Throws NotValidated.
void require_validated(const WeakBialgebra& h);

// Algebra and coalgebra axioms, multiplicativity of Delta, weak
// multiplicativity of the counit (unit form, plus the triple form when
// dim <= 12) and weak comultiplicativity of the unit. Sets h.validated.
Report check_weak_bialgebra(WeakBialgebra& h);

// (a (x) b) t for t in V (x) W.
Vector tensor_apply(const Matrix& a, const Matrix& b, const Vector& t);
// x (x) y -> y (x) x on an n*n tensor.
Vector flip(const Vector& t, std::size_t n);
Vector unit_coproduct(const WeakBialgebra& h);
bool is_cocommutative(const WeakBialgebra& h);

struct CounitalMaps {
  Matrix piR;     // h -> 1_1 eps(h 1_2)
  Matrix piL;     // h -> eps(1_1 h) 1_2
  Matrix piRbar;  // h -> 1_1 eps(1_2 h)
  Matrix piLbar;  // h -> eps(h 1_1) 1_2
  Report report;
};

// The four maps without running the identity suite.
CounitalMaps counital_matrices(const WeakBialgebra& h);
// The four maps with weak_identity_suite attached. Throws NotValidated.
CounitalMaps counital_maps(const WeakBialgebra& h);

// Every counital identity basiswise; antipode identities when h.antipode is
// set. info["cocommutative"] records whether Delta = flip o Delta.
Report weak_identity_suite(const WeakBialgebra& h);
Report weak_identity_suite(const WeakBialgebra& h, const CounitalMaps& maps);

struct BaseAlgebra {
  FrobeniusAlgebra r;          // in R-coordinates
  Matrix inject;               // dim H x dim R, columns piR(b_c) for pivot c
  Matrix project;              // dim R x dim H, inject * project = piR
  std::vector<std::size_t> columns;
  NakayamaMap nakayama;
  Matrix piR_piL;              // piR piL restricted and corestricted to R
  Report report;
};

// R = piR(H) with (eps|R, 1_1 (x) piR(1_2)). Throws NotValidated.
BaseAlgebra base_algebra(const WeakBialgebra& h);

// Transposed structure constants on the dual basis (same labels).
// Throws NotValidated; LawFailure if the dual fails the axioms.
WeakBialgebra dual_wba(const WeakBialgebra& h);

// Coalgebra map commuting with piR, piRbar and piR piL, and weakly
// multiplicative: mu'(Q (x) Q)E = Q mu with E(h (x) h') = h1_1 (x) piR(1_2)h'.
// Throws NotValidated, DimensionMismatch, FieldMismatch.
Report is_wba_morphism(const Matrix& q, const WeakBialgebra& source, const WeakBialgebra& target);

}  // namespace wba
