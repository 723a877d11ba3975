#pragma once

// The free vector space functor k: cat -> wba, group-like elements, the
// category g(H) and the adjunction k -| g.

#include "wba/category.hpp"
#include "wba/hopf.hpp"

namespace wba {

// Basis = morphisms, Delta(a) = a (x) a, eps(a) = 1, ab = [s(a) = t(b)] a.b,
// 1 = sum of identities. Throws LawFailure if the result is not a weak
// bialgebra or piR(a) != s(a), piRbar(a) != t(a).
WeakBialgebra linearize(const FiniteCategory& a, const Field& f = Field::Q());

enum class Completeness { CompleteOverQ, CertifiedByDimension, NotCertified };
std::string completeness_name(Completeness c);

struct GroupLikeSet {
  std::vector<Vector> elements;
  std::vector<std::string> labels;  // basis label for basis vectors, else g<k>
  Completeness completeness = Completeness::NotCertified;
};

// Characters of the dual algebra H*, found by simultaneous eigenvectors.
// Throws NotValidated.
GroupLikeSet discover_grouplikes(const WeakBialgebra& h);

struct GCategory {
  FiniteCategory cat;
  std::vector<Vector> carrier;  // element of H for each morphism
  GroupLikeSet grouplikes;      // all group-likes, before the admissibility filter
  Report report;
};

// Objects: group-likes r with piR(r) = r; morphisms: group-likes g with
// piR(g) and piRbar(g) group-like; src = piR, tgt = piRbar, composition is
// the product of H. Inverse g -> S(g) when H is weak Hopf.
// Throws ClosureFailure, NotValidated.
GCategory g_category(const WeakBialgebra& h);

// phi: wba(kA, H) -> cat(A, g(H)), Q -> Q restricted to A.
// Throws MorphismCheckFailed.
CatFunctor adjunction_phi(const Matrix& q, const FiniteCategory& a, const WeakBialgebra& ka, const WeakBialgebra& h,
                          const GCategory& g);
// Linear extension of a functor A -> g(H). Throws NotAFunctor, MorphismCheckFailed.
Matrix adjunction_phi_inverse(const CatFunctor& f, const FiniteCategory& a, const WeakBialgebra& ka,
                              const WeakBialgebra& h, const GCategory& g);

struct AdjunctionCount {
  std::size_t wba_morphisms = 0;  // counted directly from group-like assignments
  std::size_t functors = 0;       // |cat(A, g(H))|
  bool phi_inverse_lands = true;  // every phi^-1(F) passes the morphism check
  bool round_trips = true;        // phi phi^-1 = id and phi^-1 phi = id
  bool phi_injective = true;
  bool bijection() const {
    return wba_morphisms == functors && phi_inverse_lands && round_trips && phi_injective;
  }
};

// Hom-set bijection for one pair (A, H).
AdjunctionCount adjunction_check(const FiniteCategory& a, const WeakBialgebra& h);

// Counit kg(H) -> H; info["verdict"] is "iso", "not-iso", "not-iso (certified)"
// or "unknown".
Report counit_analysis(const WeakBialgebra& h);

// g(H) equals the full group-like set. Throws NotCocommutative.
Report cocommutative_grouplike_check(const WeakBialgebra& h);

// Identities satisfied by every group-like of a weak bialgebra (and, for
// members of g(H), piR piL(g) = piRbar(g), piL piR(g) = piLbar(g)).
Report grouplike_identities(const WeakBialgebra& h, const GCategory& g);

}  // namespace wba
