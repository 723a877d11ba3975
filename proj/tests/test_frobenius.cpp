#include "doctest.h"
#include "test_util.hpp"
#include "wba/errors.hpp"
#include "wba/frobenius.hpp"

using namespace wba;

namespace {

FinAlgebra dual_numbers() {
  const Field& q = Field::Q();
  FinAlgebra a;
  a.dim = 2;
  a.basis = {"1", "t"};
  a.mult = {unit_vector(2, 0, q), unit_vector(2, 1, q), unit_vector(2, 1, q), zero_vector(2)};
  a.unit = unit_vector(2, 0, q);
  return a;
}

}  // namespace

TEST_CASE("every builtin Frobenius algebra passes all checks") {
  for (const auto& name : builtin_frobenius_names()) {
    CAPTURE(name);
    FrobeniusAlgebra fa = builtin_frobenius(name);
    Report rep = check_separable_frobenius(fa.algebra, fa.frob);
    CHECK(rep.failures().empty());
    CHECK(rep.checks().size() == 11);
    CHECK(nakayama_ambiguity(fa.algebra, fa.frob.psi) == 0);
    CHECK(separability_idempotent_exists(fa.algebra));
  }
  CHECK_THROWS_AS(builtin_frobenius("Mat3"), Error);
}

TEST_CASE("QxQ by direct evaluation") {
  FrobeniusAlgebra fa = builtin_frobenius("QxQ");
  // psi(r e_i) f_i for r = e_1: psi(e_1 e_1) e_1 + psi(e_1 e_2) e_2 = e_1.
  const Field& q = Field::Q();
  Vector r(2);
  for (std::size_t i = 0; i < 2; ++i) axpy(r, dot(fa.frob.psi, fa.algebra.product(0, i)), unit_vector(2, i, q));
  CHECK(r == unit_vector(2, 0, q));
  CHECK(nakayama(fa.algebra, fa.frob).theta == Matrix::identity(2, q));
}

TEST_CASE("GroupZ2 and Mat2 have trivial Nakayama automorphism") {
  for (const char* name : {"GroupZ2", "Mat2", "Q", "QxQxQ"}) {
    FrobeniusAlgebra fa = builtin_frobenius(name);
    NakayamaMap m = nakayama(fa.algebra, fa.frob);
    CHECK(m.theta == Matrix::identity(fa.algebra.dim, Field::Q()));
  }
}

TEST_CASE("Mat2twist Nakayama map is conjugation by D") {
  FrobeniusAlgebra fa = builtin_frobenius("Mat2twist");
  NakayamaMap m = nakayama(fa.algebra, fa.frob);
  // Oracle: tr(D s r) = tr(D theta(r) s) forces theta(r) = D^{-1} r D, D = diag(3, 3/2).
  const mpq_class d[2] = {3, mpq_class(3, 2)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Vector expect(4);
      expect[2 * i + j] = Scalar(Field::Q(), mpq_class(d[j] / d[i]));
      CHECK(m.theta.column(2 * i + j) == expect);
    }
  CHECK(m.theta * m.theta_inv == Matrix::identity(4, Field::Q()));
  CHECK(m.theta != Matrix::identity(4, Field::Q()));
}

TEST_CASE("dual numbers admit no separability idempotent") {
  FinAlgebra a = dual_numbers();
  CHECK(!separability_idempotent_exists(a));
  // With the Frobenius form psi(t) = 1 the algebra is Frobenius but not separable.
  FrobeniusStructure f;
  f.psi = {Scalar(), Scalar(Field::Q(), 1)};
  f.frob = testutil::qmatrix({{0, 1}, {1, 0}});
  Report rep = check_separable_frobenius(a, f);
  CHECK(rep.find("frobenius.dual_bases")->pass);
  CHECK(!rep.find("separability.normalized")->pass);
}

TEST_CASE("corrupted Frobenius element is detected") {
  FrobeniusAlgebra fa = builtin_frobenius("QxQ");
  fa.frob.frob(1, 1) = Scalar(Field::Q(), 2);
  Report rep = check_separable_frobenius(fa.algebra, fa.frob);
  CHECK(!rep.find("frobenius.dual_bases")->pass);
  CHECK(!rep.all_pass());
  CHECK_THROWS_AS(nakayama(fa.algebra, fa.frob), Error);
}

TEST_CASE("shape errors") {
  FrobeniusAlgebra fa = builtin_frobenius("QxQ");
  fa.frob.psi.pop_back();
  CHECK_THROWS_AS(check_separable_frobenius(fa.algebra, fa.frob), Error);
}
