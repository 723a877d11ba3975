#include "doctest.h"
#include "test_util.hpp"
#include "wba/errors.hpp"
#include "wba/gallery.hpp"

using namespace wba;
using testutil::index_of;

TEST_CASE("antipode of the one-dimensional bialgebra is the identity") {
  WeakBialgebra k = linearize(builtin_category("discreteN:1"));
  AntipodeSolution s = solve_antipode(k);
  REQUIRE(s.antipode);
  CHECK(s.antipode->matrix == Matrix::identity(1, Field::Q()));
  CHECK(s.antipode->provenance == Antipode::Provenance::Solved);
}

TEST_CASE("k iso2: solved antipode is the groupoid inverse") {
  FiniteCategory c = builtin_category("iso2");
  WeakBialgebra h = linearize(c);
  AntipodeSolution s = solve_antipode(h);
  REQUIRE(s.antipode);
  // Oracle: the inverse table of the groupoid.
  Matrix expect(4, 4);
  for (std::size_t g = 0; g < 4; ++g) expect((*c.inverse)[g], g) = Scalar(Field::Q(), 1);
  CHECK(s.antipode->matrix == expect);
  Report suite = hopf_identity_suite(h, s.antipode->matrix);
  CHECK(suite.failures().empty());
  CHECK(suite.find("grouplike.S2(g)=g"));
}

TEST_CASE("k2 has no antipode and a rank-deficient Galois map") {
  WeakBialgebra h = builtin_wba("k2");
  AntipodeSolution s = solve_antipode(h);
  CHECK_FALSE(s.antipode);
  CHECK(s.certificate.contains("combination"));
  GaloisMap g = galois_map(h);
  CHECK(g.report.failures().empty());
  CHECK_FALSE(g.bijective);
  WeakHopfVerdict v = is_weak_hopf(h);
  CHECK_FALSE(v.weak_hopf);
  CHECK(v.report.find("weak_hopf.criteria_agree")->pass);
}

TEST_CASE("group algebra: Galois map on all of H (x) H") {
  WeakBialgebra h = builtin_wba("QZ2");
  GaloisMap g = galois_map(h);
  CHECK(g.domain.inject.cols() == 4);
  CHECK(g.codomain.inject.cols() == 4);
  CHECK(g.bijective);
  // Classical map h (x) h' -> h (x) h h' on group elements.
  WeakBialgebra q = h;
  Matrix classical(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) classical(i * 2 + (i + j) % 2, i * 2 + j) = Scalar(Field::Q(), 1);
  CHECK(g.codomain.inject * g.beta * g.domain.project == classical);
}

TEST_CASE("weak Hopf criteria agree on the gallery") {
  for (const auto& name : builtin_wba_names()) {
    CAPTURE(name);
    WeakBialgebra h = builtin_wba(name);
    WeakHopfVerdict v = is_weak_hopf(h);
    CHECK(v.report.failures().empty());
    const bool expect = name != "k2" && name != "dual_k2";
    CHECK(v.weak_hopf == expect);
    if (expect) {
      REQUIRE(v.antipode);
      CHECK(hopf_identity_suite(h, v.antipode->matrix).failures().empty());
    }
  }
}

TEST_CASE("torus B: solved antipode is the identity") {
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    WeakBialgebra b = torus_b(n);
    check_weak_bialgebra(b);
    AntipodeSolution s = solve_antipode(b);
    REQUIRE(s.antipode);
    CHECK(s.antipode->matrix == Matrix::identity(n, b.field()));
    WeakHopfVerdict v = is_weak_hopf(b);
    CHECK(v.weak_hopf);
    CHECK(v.report.find("weak_hopf.supplied_antipode_agrees")->pass);
    Report suite = hopf_identity_suite(b, *b.antipode);
    CHECK(suite.failures().empty());
    CHECK(suite.info()["grouplikes"] == n);
  }
}

TEST_CASE("a corrupted antipode is caught with a witness") {
  FiniteCategory c = builtin_category("iso2");
  WeakBialgebra h = linearize(c);
  // S = identity on k iso2: a a != T.
  Matrix fake = Matrix::identity(4, Field::Q());
  Report rep = hopf_identity_suite(h, fake);
  CHECK_FALSE(rep.find("antipode.h1_S(h2)=piL(h)")->pass);
  CHECK(rep.find("antipode.h1_S(h2)=piL(h)")->witness["basis"] == "a");
  CHECK_THROWS_AS(hopf_identity_suite(h, fake, true), Error);

  // Swapping the images of two identities breaks anti-multiplicativity only
  // together with the axioms.
  Matrix s = solve_antipode(h).antipode->matrix;
  Matrix swapped = s;
  swapped.set_column(0, s.column(1));
  swapped.set_column(1, s.column(0));
  Report bad = hopf_identity_suite(h, swapped);
  CHECK_FALSE(bad.find("antipode.anti_multiplicative")->pass);
}

TEST_CASE("supplied antipode on the dual of iso2") {
  WeakBialgebra h = builtin_wba("dual_iso2");
  WeakHopfVerdict v = is_weak_hopf(h);
  CHECK(v.weak_hopf);
  REQUIRE(v.antipode);
  // The dual antipode is the transpose of the groupoid inverse, which is the same permutation.
  FiniteCategory c = builtin_category("iso2");
  for (std::size_t g = 0; g < 4; ++g) CHECK(v.antipode->matrix.column(g) == h.alg.basis_vector((*c.inverse)[g]));
}

TEST_CASE("unvalidated input is rejected") {
  WeakBialgebra h = builtin_wba("k2");
  h.validated = false;
  CHECK_THROWS_AS(solve_antipode(h), Error);
  CHECK_THROWS_AS(galois_map(h), Error);
}
