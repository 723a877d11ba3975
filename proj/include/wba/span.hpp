#pragma once

// The duoidal category span(X) of spans over a finite set X, bimonoids in it
// (small categories with object set X) and the Hopf map beta.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wba/category.hpp"
#include "wba/report.hpp"

namespace wba {

struct Span {
  std::vector<std::string> base;     // X
  std::vector<std::string> carrier;  // A
  std::vector<std::size_t> s, t;     // A -> X
  std::string name;
};

// I = (X, id, id), J = (X x X, p1, p2) with J element (x, y) at x*|X| + y.
Span span_unit_I(const std::vector<std::string>& base);
Span span_unit_J(const std::vector<std::string>& base);
// Morphisms of a category over its objects.
Span span_of_category(const FiniteCategory& c);
// Carrier of size 1..max_carrier with uniformly random s and t.
Span random_span(std::mt19937& rng, const std::vector<std::string>& base, std::size_t max_carrier,
                 const std::string& name);

bool span_is_valid(const Span& a);

struct SpanProduct {
  Span span;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // element k = (a, b)
};

// A o B = {(a, b) : s(a) = t(b)}, s(a, b) = s(b), t(a, b) = t(a). Throws BaseMismatch.
SpanProduct span_circ(const Span& a, const Span& b);
// A . B = {(a, b) : s(a) = s(b), t(a) = t(b)}. Throws BaseMismatch.
SpanProduct span_bullet(const Span& a, const Span& b);

struct SpanSuiteOptions {
  std::uint32_t seed = 1;
  std::size_t tuples = 48;  // random 4- and 6-tuples of samples per diagram
};

// The thirteen duoidal diagrams (unit compatibility as six, two associativity,
// four unitality, naturality of gamma) checked elementwise on the samples.
// Every structure map is checked to be a morphism of spans along the way.
Report span_duoidal_suite(const std::vector<std::string>& base, const std::vector<Span>& samples,
                          const SpanSuiteOptions& opt = {});

struct SpanBimonoid {
  Span span;
  std::vector<std::optional<std::size_t>> mult;  // [g * |A| + h] for s(g) = t(h)
  std::vector<std::size_t> unit;                 // X -> A
};

SpanBimonoid span_bimonoid_of_category(const FiniteCategory& c);
// Monoid laws plus the four bimonoid diagrams with the diagonal comonoid.
Report span_bimonoid_laws(const SpanBimonoid& m);
// Throws MonoidLawFailure.
FiniteCategory span_bimonoid_to_category(const SpanBimonoid& m);

struct SpanBeta {
  bool well_defined = true;
  bool bijective = false;
  std::size_t domain_size = 0, codomain_size = 0;
  // For A = B = J and bijective beta: r(h, t(h)) read off beta^-1, per h.
  std::vector<std::size_t> extracted_inverse;
};

// beta_{A,B}: (A . H) o (B . H) -> ((A . H) o B) . H, (a, h, b, h') -> (a, h, b, hh').
// Throws BaseMismatch.
SpanBeta span_hopf_beta(const SpanBimonoid& h, const Span& a, const Span& b);
SpanBeta span_hopf_beta_JJ(const SpanBimonoid& h);

// The four morphism diagrams for (q: X -> X', Q: A -> A') between span
// bimonoids, evaluated on elements (the object arguments are J).
Report span_bimonoid_morphism(const SpanBimonoid& src, const SpanBimonoid& tgt, const std::vector<std::size_t>& q,
                              const std::vector<std::size_t>& big_q);

}  // namespace wba
