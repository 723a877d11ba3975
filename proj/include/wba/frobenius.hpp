#pragma once

// Separable Frobenius algebras: a functional psi and an element
// e = sum_i e_i (x) f_i that is at once a Frobenius and a separability element.

#include <string>

#include "wba/algebra.hpp"

namespace wba {

struct FrobeniusStructure {
  Vector psi;   // psi(b_i)
  Matrix frob;  // e = sum_{p,q} frob(p,q) b_p (x) b_q
};

struct NakayamaMap {
  Matrix theta;
  Matrix theta_inv;
};

// A separable Frobenius algebra, the base "R" of the bimodule constructions.
struct FrobeniusAlgebra {
  FinAlgebra algebra;
  FrobeniusStructure frob;
};

Report check_separable_frobenius(const FinAlgebra& r, const FrobeniusStructure& f);

// theta(r) = psi(e_i r) f_i and theta^{-1}(r) = psi(r f_i) e_i.
// Throws NotFrobenius when psi and e are not dual bases.
NakayamaMap nakayama(const FinAlgebra& r, const FrobeniusStructure& f);

// Dimension of {X linear : psi(X(r) s) = 0 for all r, s}; zero means the
// Nakayama automorphism is pinned down by psi(sr) = psi(theta(r) s).
std::size_t nakayama_ambiguity(const FinAlgebra& r, const Vector& psi);

// Whether some e in R (x) R satisfies r e = e r and mu(e) = 1.
bool separability_idempotent_exists(const FinAlgebra& r);

// "Q", "QxQ", "QxQxQ", "GroupZ2", "Mat2", and "Mat2twist" (M_2 with
// psi = tr(D .), D = diag(3, 3/2), whose Nakayama map is not the identity).
FrobeniusAlgebra builtin_frobenius(const std::string& name);
std::vector<std::string> builtin_frobenius_names();

}  // namespace wba
