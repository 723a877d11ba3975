#include <chrono>

#include "doctest.h"
#include "wba/bimre.hpp"
#include "wba/errors.hpp"
#include "wba/gallery.hpp"

using namespace wba;

namespace {

std::shared_ptr<const ReBase> named_base(const std::string& name) {
  if (name == "base(dual_k2)") return make_re_base(base_algebra(builtin_wba("dual_k2")).r);
  return make_re_base(builtin_frobenius(name));
}

// dim M (x)_{R^e} N as the quotient of M (x) N by m x (x) n - m (x) x n,
// without the idempotent.
std::size_t balanced_tensor_dim(const ReBimodule& m, const ReBimodule& n) {
  const Field& f = m.base->field();
  std::vector<Vector> rel;
  for (std::size_t x = 0; x < m.left.size(); ++x)
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < n.dim; ++j)
        rel.push_back(sub(kron(m.right[x].column(i), unit_vector(n.dim, j, f)),
                          kron(unit_vector(m.dim, i, f), n.left[x].column(j))));
  return m.dim * n.dim - rank(Matrix::from_columns(rel, m.dim * n.dim));
}

}  // namespace

TEST_CASE("R^e-bimodule units and random samples are bimodules") {
  std::mt19937 rng(3);
  for (const std::string name : {"Q", "QxQ", "QxQxQ", "GroupZ2", "Mat2", "Mat2twist", "base(dual_k2)"}) {
    CAPTURE(name);
    const auto b = named_base(name);
    CHECK(check_re_bimodule(bimre_unit_I(b)).failures().empty());
    CHECK(check_re_bimodule(bimre_unit_J(b)).failures().empty());
    CHECK(check_re_bimodule(random_re_bimodule(b, rng, 3, "M")).failures().empty());
  }
  // A left action that is not multiplicative.
  const auto b = named_base("QxQ");
  ReBimodule bad = bimre_unit_I(b);
  bad.left[1] = bad.left[2];
  CHECK_FALSE(check_re_bimodule(bad).find("bimodule.left_associative")->pass);
}

TEST_CASE("products over Q are plain tensor products") {
  const auto b = named_base("Q");
  std::mt19937 rng(5);
  for (int k = 0; k < 6; ++k) {
    const ReBimodule m = random_re_bimodule(b, rng, 3, "M"), n = random_re_bimodule(b, rng, 3, "N");
    CHECK(bimre_circ(m, n).object.dim == m.dim * n.dim);
    CHECK(bimre_bullet(m, n).object.dim == m.dim * n.dim);
  }
}

TEST_CASE("o product dimensions agree with the balanced tensor product") {
  std::mt19937 rng(11);
  for (const std::string name : {"Q", "QxQ", "GroupZ2", "base(dual_k2)"}) {
    CAPTURE(name);
    const auto b = named_base(name);
    const std::vector<ReBimodule> xs{bimre_unit_I(b), bimre_unit_J(b), random_re_bimodule(b, rng, 3, "M")};
    for (const auto& m : xs)
      for (const auto& n : xs) {
        CAPTURE(m.name + " o " + n.name);
        const DuoidalProductObject p = bimre_circ(m, n);
        CHECK(p.object.dim == balanced_tensor_dim(m, n));
        CHECK(p.idempotent * p.idempotent == p.idempotent);
        CHECK(p.project * p.inject == Matrix::identity(p.object.dim, b->field()));
        CHECK(check_re_bimodule(p.object).failures().empty());
      }
  }
  // R = QxQ: I o I = I inside the 16-dimensional I (x) I.
  const auto b = named_base("QxQ");
  const DuoidalProductObject ii = bimre_circ(bimre_unit_I(b), bimre_unit_I(b));
  CHECK(ii.idempotent.rows() == 16);
  CHECK(ii.object.dim == 4);
}

TEST_CASE(". products with the unit J") {
  std::mt19937 rng(13);
  for (const std::string name : {"QxQ", "GroupZ2", "Mat2twist", "base(dual_k2)"}) {
    CAPTURE(name);
    const auto b = named_base(name);
    const ReBimodule j = bimre_unit_J(b);
    const ReBimodule m = random_re_bimodule(b, rng, 3, "M");
    CHECK(bimre_bullet(j, m).object.dim == m.dim);
    CHECK(bimre_bullet(m, j).object.dim == m.dim);
    const DuoidalProductObject jj = bimre_bullet(j, j);
    CHECK(jj.object.dim == j.dim);
    CHECK(check_re_bimodule(jj.object).failures().empty());
  }
}

TEST_CASE("products over different base algebras are rejected") {
  const auto a = named_base("QxQ"), b = named_base("QxQ");
  try {
    bimre_circ(bimre_unit_I(a), bimre_unit_I(b));
    FAIL("expected RMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RMismatch);
  }
  CHECK_THROWS_AS(bimre_bullet(bimre_unit_J(a), bimre_unit_J(b)), Error);
}

TEST_CASE("bim(R^e) duoidal diagrams") {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(17);
  for (const std::string name : {"Q", "QxQ", "GroupZ2", "Mat2", "base(dual_k2)"}) {
    CAPTURE(name);
    const auto b = named_base(name);
    const std::vector<ReBimodule> samples{bimre_unit_I(b), bimre_unit_J(b), random_re_bimodule(b, rng, 3, "M")};
    if (name != "Mat2") CHECK(samples[2].dim <= 3);
    Report rep = bimre_duoidal_suite(b, samples, {static_cast<std::uint32_t>(rng()), 2, 4, 32});
    CHECK(rep.failures().empty());
    for (const auto& failure : rep.failures()) MESSAGE(failure << ": " << rep.find(failure)->witness.dump());
    for (const char* diagram :
         {"unit.Delta_I_coassociative", "unit.Delta_I_left_counit", "unit.Delta_I_right_counit",
          "unit.mu_J_associative", "unit.mu_J_left_unit", "unit.mu_J_right_unit", "associativity.gamma_with_alpha_o",
          "associativity.gamma_with_alpha_.", "unitality.lambda_o", "unitality.rho_o", "unitality.lambda_.",
          "unitality.rho_.", "gamma.natural", "gamma.balanced", "bimodule_map.gamma", "bimodule_map.tau",
          "bimodule_map.mu_J", "bimodule_map.Delta_I", "bimodule_map.alpha_o", "bimodule_map.alpha_.",
          "bimodule_map.lambda_o", "bimodule_map.rho_o", "bimodule_map.lambda_.", "bimodule_map.rho_."}) {
      CAPTURE(diagram);
      CHECK(rep.find(diagram) != nullptr);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("bim(R^e) suite: " << secs << " s");
  CHECK(secs < 60.0);
}

TEST_CASE("bim(R^e) duoidal diagrams with a nontrivial Nakayama automorphism") {
  // Every R above has a symmetric Frobenius element, so e_i and f_i can be
  // exchanged in tau and gamma without effect; here they cannot.
  const auto b = named_base("Mat2twist");
  CHECK(b->nakayama.theta != Matrix::identity(4, b->field()));
  std::mt19937 rng(19);
  Report rep = bimre_duoidal_suite(b, {bimre_unit_I(b), bimre_unit_J(b), random_re_bimodule(b, rng, 3, "M")},
                                   {23, 1, 2, 16});
  CHECK(rep.failures().empty());
  for (const auto& failure : rep.failures()) MESSAGE(failure << ": " << rep.find(failure)->witness.dump());
}

TEST_CASE("a broken Frobenius element breaks bim(R^e)") {
  FrobeniusAlgebra r = builtin_frobenius("QxQ");
  r.frob.frob(0, 0) = Scalar(Field::Q(), 2);
  CHECK_THROWS_AS(make_re_base(r), Error);

  // Bypassing the check: the products or the diagrams must fail.
  auto good = named_base("QxQ");
  auto bad = std::make_shared<ReBase>(*good);
  bad->e[0] = scale(Scalar(Field::Q(), 2), bad->e[0]);
  std::shared_ptr<const ReBase> cbad = bad;
  Report rep = bimre_duoidal_suite(cbad, {bimre_unit_I(cbad), bimre_unit_J(cbad)});
  REQUIRE(rep.find("products.idempotent") != nullptr);
  CHECK_FALSE(rep.find("products.idempotent")->pass);
}

TEST_CASE("weak bialgebras are bimonoids in bim(R^e)") {
  for (const auto& name : builtin_wba_names()) {
    CAPTURE(name);
    WeakBialgebra h = builtin_wba(name);
    const BimonoidInBimRe b = wba_to_bimonoid(h);
    CHECK(b.carrier.dim == h.dim());
    Report laws = bimonoid_laws(b);
    CHECK(laws.failures().empty());
    CHECK(laws.find("bimonoid.Delta_mu") != nullptr);
    CHECK(laws.find("bimonoid.eps_eta") != nullptr);
  }
  // Q[Z/2]: R = Q and both products are the plain tensor product.
  const BimonoidInBimRe qz2 = wba_to_bimonoid(builtin_wba("QZ2"));
  CHECK(qz2.carrier.base->d == 1);
  CHECK(qz2.circ.object.dim == 4);
  CHECK(qz2.bullet.object.dim == 4);
  CHECK(wba_to_bimonoid(builtin_wba("k2")).carrier.base->d == 2);
  CHECK(wba_to_bimonoid(builtin_wba("dual_k2")).carrier.base->d == 2);
}

TEST_CASE("dictionary round trips") {
  for (const auto& name : builtin_wba_names()) {
    CAPTURE(name);
    Report rep = duoidal_roundtrip(builtin_wba(name));
    CHECK(rep.failures().empty());
    for (const auto& failure : rep.failures()) MESSAGE(failure);
    CHECK(rep.find("roundtrip.wba.comult") != nullptr);
    CHECK(rep.find("roundtrip.bimonoid.counit") != nullptr);
    CHECK(rep.find("to_wba.sigma.coalgebra_map") != nullptr);
  }
}

TEST_CASE("a broken counit is not a bimonoid") {
  BimonoidInBimRe b = wba_to_bimonoid(builtin_wba("k2"));
  b.counit = scale(Scalar(Field::Q(), 2), b.counit);
  Report laws = bimonoid_laws(b);
  CHECK_FALSE(laws.find("comonoid.left_counit")->pass);
  CHECK_THROWS_AS(bimonoid_to_wba(b), Error);

  BimonoidInBimRe c = wba_to_bimonoid(builtin_wba("k2"));
  c.mult(0, 0) = c.mult(0, 0) + Scalar(Field::Q(), 1);
  CHECK_FALSE(bimonoid_laws(c).all_pass());
}
