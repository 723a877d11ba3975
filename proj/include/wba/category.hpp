#pragma once

// Finite categories and groupoids as composition tables.
//
// Composition convention: g o h is defined exactly when src(g) == tgt(h),
// and then src(g o h) = src(h), tgt(g o h) = tgt(g).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wba/report.hpp"

namespace wba {

struct Morphism {
  std::string name;
  std::size_t src = 0;
  std::size_t tgt = 0;
};

struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::size_t> identities;                // per object
  std::vector<std::optional<std::size_t>> compose;    // [g * |mor| + h] = g o h
  std::optional<std::vector<std::size_t>> inverse;    // groupoids only

  std::size_t size() const { return morphisms.size(); }
  std::optional<std::size_t> composite(std::size_t g, std::size_t h) const { return compose[g * size() + h]; }
  std::optional<std::size_t> find_morphism(const std::string& name) const;
  std::optional<std::size_t> find_object(const std::string& name) const;
};

struct CatFunctor {
  std::vector<std::size_t> on_objects;
  std::vector<std::size_t> on_morphisms;
  friend bool operator==(const CatFunctor&, const CatFunctor&) = default;
};

Report validate_category(const FiniteCategory& c);
// Category laws plus g o g^-1 = id_tgt(g), g^-1 o g = id_src(g).
Report validate_groupoid(const FiniteCategory& c);

bool is_functor(const CatFunctor& f, const FiniteCategory& a, const FiniteCategory& b);
// g after f.
CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f);
CatFunctor identity_functor(const FiniteCategory& c);

inline constexpr std::uint64_t kDefaultFunctorBound = 1000000;

// All functors a -> b by backtracking over morphism images.
// Throws SearchSpaceTooLarge when |mor b|^|mor a| exceeds bound.
std::vector<CatFunctor> enumerate_functors(const FiniteCategory& a, const FiniteCategory& b,
                                           std::uint64_t bound = kDefaultFunctorBound);

// "interval", "iso2", "discreteN:k", "cyclicN:k", "parallel2". Throws UnknownName.
FiniteCategory builtin_category(const std::string& name);
std::vector<std::string> builtin_category_samples();

}  // namespace wba
