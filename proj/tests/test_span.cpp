#include <chrono>

#include "doctest.h"
#include "wba/errors.hpp"
#include "wba/span.hpp"

using namespace wba;

namespace {

Span named(Span s, const std::string& name) {
  s.name = name;
  return s;
}

// All maps {0..n-1} -> {0..m-1} as digit vectors.
std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == m) v[i++] = 0;
    if (i == n) return out;
  }
}

}  // namespace

TEST_CASE("o and . products of spans") {
  const Span a = span_of_category(builtin_category("interval"));
  SpanProduct c = span_circ(a, a);
  // (S,S), (T,T), (T,a), (a,S)
  CHECK(c.span.carrier.size() == 4);
  CHECK(span_is_valid(c.span));
  SpanProduct b = span_bullet(a, a);
  CHECK(b.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}, {2, 2}});

  const Span j = span_unit_J(a.base);
  CHECK(span_circ(j, j).span.carrier.size() == 8);
  CHECK(span_bullet(j, a).span.carrier.size() == 3);

  Span other = span_unit_I({"x"});
  CHECK_THROWS_AS(span_circ(a, other), Error);
  try {
    span_bullet(a, other);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BaseMismatch);
  }
}

TEST_CASE("span(X) duoidal diagrams on structured and random samples") {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(7);
  std::size_t random_count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> base;
    for (std::size_t i = 0; i < n; ++i) base.push_back(n == 2 ? (i == 0 ? "S" : "T") : "x" + std::to_string(i));
    std::vector<Span> samples{span_unit_I(base), span_unit_J(base)};
    if (n == 2) {
      samples.push_back(named(span_of_category(builtin_category("interval")), "2"));
      samples.push_back(named(span_of_category(builtin_category("iso2")), "iso2"));
    }
    for (int k = 0; k < 8; ++k, ++random_count)
      samples.push_back(random_span(rng, base, 4, "r" + std::to_string(k)));
    CAPTURE(n);
    Report rep = span_duoidal_suite(base, samples, {static_cast<std::uint32_t>(n), 24});
    CHECK(rep.checks().size() == 13);
    CHECK(rep.failures().empty());
    CHECK(rep.info()["coverage"]["gamma.natural"]["elements"].get<std::size_t>() > 0);
  }
  CHECK(random_count >= 20);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 10.0);
}

TEST_CASE("span bimonoids are categories") {
  for (const auto& name : builtin_category_samples()) {
    CAPTURE(name);
    const FiniteCategory c = builtin_category(name);
    SpanBimonoid m = span_bimonoid_of_category(c);
    Report laws = span_bimonoid_laws(m);
    CHECK(laws.failures().empty());
    CHECK(laws.find("bimonoid.Delta_mu") != nullptr);
    FiniteCategory back = span_bimonoid_to_category(m);
    CHECK(back.compose == c.compose);
    CHECK(back.identities == c.identities);
    CHECK(back.inverse.has_value() == c.inverse.has_value());
    CHECK(validate_category(back).failures().empty());
  }
}

TEST_CASE("a broken composition table is not a monoid") {
  SpanBimonoid m = span_bimonoid_of_category(builtin_category("iso2"));
  // a^-1 o a := T breaks the source-target compatibility of the product.
  m.mult[3 * 4 + 2] = 1;
  CHECK_FALSE(span_bimonoid_laws(m).find("monoid.mult_is_span_map")->pass);
  CHECK_THROWS_AS(span_bimonoid_to_category(m), Error);

  SpanBimonoid c3 = span_bimonoid_of_category(builtin_category("cyclicN:3"));
  // c o c := o keeps s, t but breaks associativity.
  c3.mult[1 * 3 + 1] = 0;
  Report rep = span_bimonoid_laws(c3);
  CHECK(rep.find("monoid.mult_is_span_map")->pass);
  CHECK_FALSE(rep.find("monoid.associative")->pass);
}

TEST_CASE("the Hopf map beta on spans detects groupoids") {
  for (const auto& name : builtin_category_samples()) {
    CAPTURE(name);
    const FiniteCategory c = builtin_category(name);
    SpanBimonoid m = span_bimonoid_of_category(c);
    SpanBeta b = span_hopf_beta_JJ(m);
    CHECK(b.well_defined);
    CHECK(b.bijective == c.inverse.has_value());
    if (c.inverse) CHECK(b.extracted_inverse == *c.inverse);
    else CHECK(b.extracted_inverse.empty());
  }
  // The interval: H o H has 4 elements, {(h, h') : t(h) = t(h')} has 5.
  SpanBeta b = span_hopf_beta_JJ(span_bimonoid_of_category(builtin_category("interval")));
  CHECK(b.domain_size == 4);
  CHECK(b.codomain_size == 5);

  // Other object arguments give the same verdict.
  const FiniteCategory iso = builtin_category("iso2");
  SpanBimonoid m = span_bimonoid_of_category(iso);
  const Span a = span_of_category(builtin_category("interval"));
  CHECK(span_hopf_beta(m, a, span_unit_I(a.base)).bijective);
}

TEST_CASE("bimonoid morphisms of span bimonoids are functors") {
  const std::vector<std::string> names{"interval", "iso2", "discreteN:1", "cyclicN:2", "parallel2"};
  std::size_t agreeing = 0, functors = 0;
  for (const auto& an : names)
    for (const auto& bn : names) {
      const FiniteCategory a = builtin_category(an), b = builtin_category(bn);
      const SpanBimonoid ma = span_bimonoid_of_category(a), mb = span_bimonoid_of_category(b);
      for (const auto& q : all_maps(a.objects.size(), b.objects.size()))
        for (const auto& big_q : all_maps(a.size(), b.size())) {
          const bool diagrams = span_bimonoid_morphism(ma, mb, q, big_q).all_pass();
          const bool functor = is_functor(CatFunctor{q, big_q}, a, b);
          CHECK(diagrams == functor);
          agreeing += diagrams == functor;
          functors += functor;
        }
    }
  CHECK(agreeing > 0);
  CHECK(functors > 0);
}
