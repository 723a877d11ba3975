#include "doctest.h"
#include "test_util.hpp"
#include "wba/errors.hpp"
#include "wba/gallery.hpp"

using namespace wba;
using testutil::elem;
using testutil::index_of;

TEST_CASE("gallery members pass the axioms and the identity suite") {
  for (const auto& name : builtin_wba_names()) {
    CAPTURE(name);
    WeakBialgebra h = builtin_wba(name);
    Report rep = check_weak_bialgebra(h);
    CHECK(rep.failures().empty());
    CHECK(h.validated);
    CHECK(rep.info()["counit_forms_agree"] == true);
    CounitalMaps m = counital_maps(h);
    CHECK(m.report.failures().empty());
  }
}

TEST_CASE("the one-dimensional bialgebra") {
  WeakBialgebra k = linearize(builtin_category("discreteN:1"));
  CHECK(k.dim() == 1);
  CounitalMaps m = counital_maps(k);
  CHECK(m.piR == Matrix::identity(1, Field::Q()));
}

TEST_CASE("k2: piR is the source, piRbar the target") {
  WeakBialgebra h = builtin_wba("k2");
  CounitalMaps m = counital_maps(h);
  const std::size_t a = index_of(h, "a");
  CHECK(m.piR.column(a) == elem(h, {{"S", 1}}));
  CHECK(m.piRbar.column(a) == elem(h, {{"T", 1}}));
  // piL and piLbar are target and source in the other order.
  CHECK(m.piL.column(a) == elem(h, {{"T", 1}}));
  CHECK(m.piLbar.column(a) == elem(h, {{"S", 1}}));
  CHECK(m.report.info()["cocommutative"] == true);
}

TEST_CASE("dual k2: structure and counital values") {
  WeakBialgebra h = builtin_wba("dual_k2");
  // pq = delta_pq p, unit S + T + a.
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; q < 3; ++q)
      CHECK(h.alg.product(p, q) == (p == q ? h.alg.basis_vector(p) : zero_vector(3)));
  CHECK(h.alg.unit == elem(h, {{"S", 1}, {"T", 1}, {"a", 1}}));
  Vector da = h.coalg.coproduct(elem(h, {{"a", 1}}));
  Vector expect = add(kron(elem(h, {{"T", 1}}), elem(h, {{"a", 1}})), kron(elem(h, {{"a", 1}}), elem(h, {{"S", 1}})));
  CHECK(da == expect);
  CHECK(h.coalg.counit == elem(h, {{"S", 1}, {"T", 1}}));

  CounitalMaps m = counital_maps(h);
  CHECK(m.report.failures().empty());
  CHECK(m.piR.column(index_of(h, "S")) == elem(h, {{"S", 1}, {"a", 1}}));
  CHECK(m.piR.column(index_of(h, "T")) == elem(h, {{"T", 1}}));
  CHECK(m.piR.column(index_of(h, "a")) == zero_vector(3));
  CHECK(m.piRbar == m.piR);
  CHECK(m.report.info()["cocommutative"] == false);
}

TEST_CASE("dual iso2 comultiplication") {
  WeakBialgebra h = builtin_wba("dual_iso2");
  Vector ds = h.coalg.coproduct(elem(h, {{"S", 1}}));
  Vector expect = add(kron(elem(h, {{"S", 1}}), elem(h, {{"S", 1}})), kron(elem(h, {{"a^-1", 1}}), elem(h, {{"a", 1}})));
  CHECK(ds == expect);
}

TEST_CASE("double dual is the identity on structure constants") {
  for (const char* name : {"k2", "kiso2", "torusB:3"}) {
    CAPTURE(name);
    WeakBialgebra h = builtin_wba(name);
    WeakBialgebra dd = dual_wba(dual_wba(h));
    CHECK(dd.alg.mult == h.alg.mult);
    CHECK(dd.alg.unit == h.alg.unit);
    CHECK(dd.coalg.counit == h.coalg.counit);
    for (std::size_t i = 0; i < h.dim(); ++i)
      CHECK(dd.coalg.coproduct(h.alg.basis_vector(i)) == h.coalg.coproduct(h.alg.basis_vector(i)));
  }
}

TEST_CASE("a group algebra has piR = eps(.)1") {
  WeakBialgebra h = builtin_wba("QZ2");
  CounitalMaps m = counital_maps(h);
  Matrix expect(2, 2);
  expect(0, 0) = Scalar(Field::Q(), 1);
  expect(0, 1) = Scalar(Field::Q(), 1);
  CHECK(m.piR == expect);
  CHECK(m.piL == expect);
  CHECK(m.piRbar == expect);
  CHECK(m.piLbar == expect);
}

TEST_CASE("broken counit is detected") {
  WeakBialgebra h = builtin_wba("k2");
  h.coalg.counit = zero_vector(3);
  Report rep = check_weak_bialgebra(h);
  CHECK_FALSE(h.validated);
  CHECK_FALSE(rep.find("coalgebra.counital")->pass);
  CHECK_THROWS_AS(counital_maps(h), Error);
}

TEST_CASE("a broken coproduct is detected") {
  WeakBialgebra h = builtin_wba("kiso2");
  // Delta(a) = a (x) T is not counital.
  h.coalg.comult[index_of(h, "a")] = {{index_of(h, "a"), index_of(h, "T"), Scalar(Field::Q(), 1)}};
  Report rep = check_weak_bialgebra(h);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("shape errors throw") {
  WeakBialgebra h = builtin_wba("k2");
  h.coalg.counit.pop_back();
  CHECK_THROWS_AS(check_weak_bialgebra(h), Error);
}

TEST_CASE("base algebra") {
  SUBCASE("ordinary bialgebra: R = k") {
    BaseAlgebra b = base_algebra(builtin_wba("QZ2"));
    CHECK(b.r.algebra.dim == 1);
    CHECK(b.report.failures().empty());
  }
  SUBCASE("k2: R spanned by the object idempotents") {
    WeakBialgebra h = builtin_wba("k2");
    BaseAlgebra b = base_algebra(h);
    CHECK(b.r.algebra.dim == 2);
    CHECK(b.r.algebra.basis == std::vector<std::string>{"S", "T"});
    CHECK(b.report.failures().empty());
    CHECK(b.nakayama.theta == Matrix::identity(2, Field::Q()));
  }
  SUBCASE("torus B: piR is the identity") {
    for (int n : {2, 3, 4}) {
      WeakBialgebra h = torus_b(n);
      check_weak_bialgebra(h);
      CounitalMaps m = counital_maps(h);
      CHECK(m.piR == Matrix::identity(n, h.field()));
      BaseAlgebra b = base_algebra(h);
      CHECK(b.r.algebra.dim == static_cast<std::size_t>(n));
      CHECK(b.report.failures().empty());
      CHECK(h.coalg.apply_counit(h.alg.unit) == Scalar(h.field(), n));
    }
  }
  SUBCASE("dual k2: Frobenius checks and the Nakayama comparison") {
    BaseAlgebra b = base_algebra(builtin_wba("dual_k2"));
    CHECK(b.r.algebra.dim == 2);
    CHECK(b.report.failures().empty());
  }
}

TEST_CASE("morphism checker") {
  WeakBialgebra h = builtin_wba("k2");
  CHECK(is_wba_morphism(Matrix::identity(3, Field::Q()), h, h).all_pass());
  Report z = is_wba_morphism(Matrix(3, 3), h, h);
  CHECK_FALSE(z.find("morphism.counital")->pass);
  WeakBialgebra d = builtin_wba("dual_k2");
  CHECK(is_wba_morphism(Matrix::identity(3, Field::Q()), d, d).all_pass());
  WeakBialgebra t = builtin_wba("torusB:2");
  CHECK_THROWS_AS(is_wba_morphism(Matrix::identity(2, t.field()), h, t), Error);
}
