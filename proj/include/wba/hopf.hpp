#pragma once

// Antipodes and the Galois map of a weak bialgebra.

#include <optional>

#include "wba/weak_bialgebra.hpp"

namespace wba {

struct Antipode {
  enum class Provenance { Solved, Supplied };
  Matrix matrix;
  Provenance provenance = Provenance::Solved;
};

std::string provenance_name(Antipode::Provenance p);

// Either an antipode or the reason there is none. When the linear
// equations are inconsistent, `certificate` holds a left-kernel
// combination of equations whose right-hand side is nonzero.
struct AntipodeSolution {
  std::optional<Antipode> antipode;
  std::string reason;
  nlohmann::ordered_json certificate;
};

// Solves h_1 S(h_2) = piL(h), S(h_1) h_2 = piR(h) and S(h) = piR(h_1) S(h_2)
// for S. The last equation is the linear form of S(h_1) h_2 S(h_3) = S(h) in
// presence of the second; a unique solution is still tested against all
// three axioms.
// Throws AmbiguousSolutionSet, NotValidated.
AntipodeSolution solve_antipode(const WeakBialgebra& h);

// The three antipode axioms.
Report antipode_axioms(const WeakBialgebra& h, const CounitalMaps& m, const Matrix& s);
// Axioms, anti-(co)multiplicativity and the antipode/counital-map table.
Report antipode_identities(const WeakBialgebra& h, const CounitalMaps& m, const Matrix& s);

struct GaloisMap {
  SplitIdempotent domain;    // image of h (x) h' -> h1_1 (x) piR(1_2)h'
  SplitIdempotent codomain;  // image of h (x) h' -> 1_1 h (x) 1_2 h'
  Matrix beta;               // codomain coords <- domain coords
  bool bijective = false;
  Report report;
};

GaloisMap galois_map(const WeakBialgebra& h);

struct WeakHopfVerdict {
  bool weak_hopf = false;
  std::optional<Antipode> antipode;
  Report report;
};

// Decided by bijectivity of the Galois map, cross-checked against
// solve_antipode and against a supplied antipode if one is attached.
WeakHopfVerdict is_weak_hopf(const WeakBialgebra& h);

// Antipode identities plus, on every group-like g, the weak Hopf group-like
// identities (S^2(g) = g, piLbar(g) = piR(g), ...). With require_axioms the
// call throws AntipodeAxiomFailure instead of reporting failed axioms.
Report hopf_identity_suite(const WeakBialgebra& h, const Matrix& s, bool require_axioms = false);

}  // namespace wba
