#pragma once

// The duoidal category bim(R^e) of R^e-bimodules over a separable Frobenius
// algebra R, R^e = R (x) R^op. Both products are realised as images of
// idempotents on the plain tensor product. Also the dictionary between
// bimonoids in bim(R^e) and weak bialgebras with base algebra R.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "wba/frobenius.hpp"
#include "wba/weak_bialgebra.hpp"

namespace wba {

struct ReBase {
  FrobeniusAlgebra r;
  NakayamaMap nakayama;
  std::size_t d = 0;
  std::vector<Vector> e, f;  // Frobenius element sum_i e_i (x) f_i
  Vector one;
  const Field& field() const { return *r.algebra.field; }
  // (s (x) r)(s' (x) r') = ss' (x) r'r on basis pairs, index p*d + q.
  Vector re_product(std::size_t x, std::size_t y) const;
};

// Throws NotFrobenius unless r passes check_separable_frobenius.
std::shared_ptr<const ReBase> make_re_base(const FrobeniusAlgebra& r);

struct ReBimodule {
  std::shared_ptr<const ReBase> base;
  std::size_t dim = 0;
  // Actions of the basis b_p (x) b_q of R^e (index p*d + q): left[x] v = x v,
  // right[x] v = v x.
  std::vector<Matrix> left, right;
  std::string name;
};

Report check_re_bimodule(const ReBimodule& m);

// I = R^e: (s (x) r)(x (x) y) = sx (x) yr, (x (x) y)(s (x) r) = xs (x) ry.
ReBimodule bimre_unit_I(const std::shared_ptr<const ReBase>& base);
// J = R^e: (s (x) r)(x (x) y) = x (x) s y theta^-1(r), (x (x) y)(s (x) r) = rxs (x) y.
ReBimodule bimre_unit_J(const std::shared_ptr<const ReBase>& base);
// Same bimodule in the basis given by the columns of p.
ReBimodule rebase_bimodule(const ReBimodule& m, const Matrix& p, const std::string& name);
// For commutative split R a random sum of one-dimensional bimodules (dim in
// 1..max_dim) in a random basis; otherwise I in a random basis.
ReBimodule random_re_bimodule(const std::shared_ptr<const ReBase>& base, std::mt19937& rng, std::size_t max_dim,
                              const std::string& name);

enum class Flavor { Circ, Bullet };

struct DuoidalProductObject {
  ReBimodule object;
  Flavor flavor = Flavor::Circ;
  std::size_t left_dim = 0, right_dim = 0;
  Matrix idempotent;  // on M (x) N, index i*dim N + j
  Matrix inject;      // (dim M dim N) x dim object
  Matrix project;     // dim object x (dim M dim N)
};

// M o N = M (x)_{R^e} N, idempotent m (x) n -> m(e_i (x) f_j) (x) (f_i (x) e_j)n.
// Throws RMismatch, IdempotentFailure.
DuoidalProductObject bimre_circ(const ReBimodule& m, const ReBimodule& n);
// M . N, idempotent m (x) n -> (e_i (x) 1)m(e_j (x) 1) (x) (1 (x) f_i)n(1 (x) f_j),
// actions (s (x) r)(m . n) = (1 (x) r)m . (s (x) 1)n, (m . n)(s (x) r) = m(1 (x) r) . n(s (x) 1).
DuoidalProductObject bimre_bullet(const ReBimodule& m, const ReBimodule& n);

struct BimreSuiteOptions {
  std::uint32_t seed = 1;
  std::size_t tuples = 3;           // random 4- and 6-tuples beyond the constant ones
  std::size_t naturality_masks = 4; // choices of (id | lambda_o) per gamma argument
  std::size_t balance_cap = 64;     // basis 4-tuples per balancing relation
};

// Materialises gamma, tau, mu_J, Delta_I, alpha, lambda, rho as matrices,
// checks each is a bimodule map, checks the balancing of gamma and the
// thirteen duoidal diagrams on the samples.
Report bimre_duoidal_suite(const std::shared_ptr<const ReBase>& base, const std::vector<ReBimodule>& samples,
                           const BimreSuiteOptions& opt = {});

struct BimonoidInBimRe {
  ReBimodule carrier;
  Matrix mult;    // H o H -> H
  Matrix unit;    // I -> H
  Matrix comult;  // H -> H . H
  Matrix counit;  // H -> J
  DuoidalProductObject circ, bullet;  // H o H and H . H
  std::vector<std::string> labels;
};

// Monoid and comonoid laws, bimodule-map property of the four maps and the
// four compatibility diagrams.
Report bimonoid_laws(const BimonoidInBimRe& b);

// R = piR(H), eta(s (x) r) = s piLbar(r), Delta corestricted to H . H,
// eps = (piR (x) piRbar)Delta. Throws NotValidated, FactorizationFailure.
BimonoidInBimRe wba_to_bimonoid(const WeakBialgebra& h);

struct WbaFromBimonoid {
  WeakBialgebra wba;
  Matrix sigma;  // R -> H, r -> eta(r (x) 1)
  Report report; // weak bialgebra axioms and sigma: R -> piR(H) an algebra and coalgebra iso
};

// mu = mult pi_o, 1 = unit(1 (x) 1), Delta = iota_. comult, eps = (psi (x) psi) counit.
// Throws LawFailure when the laws or the resulting axioms fail.
WbaFromBimonoid bimonoid_to_wba(const BimonoidInBimRe& b);

// bimonoid_to_wba(wba_to_bimonoid(h)) == h on structure constants, and
// wba_to_bimonoid(bimonoid_to_wba(b)) == b after transport along sigma.
Report duoidal_roundtrip(const WeakBialgebra& h);

}  // namespace wba
