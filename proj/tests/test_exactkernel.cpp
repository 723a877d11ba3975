#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "wba/errors.hpp"
#include "wba/matrix.hpp"

using namespace wba;

namespace {

// Oracle: Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}, with integer arithmetic.
int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long> imul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic integer polynomial.
std::vector<long> idiv(std::vector<long> a, const std::vector<long>& b) {
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1];
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  return q;
}

std::vector<long> mobius_cyclotomic(int n) {
  std::vector<long> num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::vector<long> f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    int m = mobius(n / d);
    if (m == 1) num = imul(num, f);
    if (m == -1) den = imul(den, f);
  }
  // den is monic up to sign (-1)^k; normalise to monic before dividing.
  if (den.back() < 0)
    for (auto& c : den) c = -c;
  std::vector<long> q = idiv(num, den);
  if (q.back() < 0)
    for (auto& c : q) c = -c;
  return q;
}

QPoly to_q(const std::vector<long>& v) {
  QPoly p;
  for (long c : v) p.emplace_back(c);
  qpoly::trim(p);
  return p;
}

// Oracle for 2x^3 - 3x^2 + 1: repeated synthetic division at hand-picked candidates.
std::vector<mpq_class> synthetic_roots(QPoly p, const std::vector<mpq_class>& candidates) {
  std::vector<mpq_class> out;
  for (const auto& r : candidates) {
    for (;;) {
      mpq_class acc = 0;
      QPoly q(p.size() - 1);
      for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * r + p[i];
        if (i > 0) q[i - 1] = acc;
      }
      if (acc != 0 || p.size() < 2) break;
      out.push_back(r);
      p = q;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the Mobius product formula") {
  CHECK(cyclotomic_polynomial(1) == to_q({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == to_q({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == to_q({1, 0, -1, 0, 1}));
  for (int n = 1; n <= 24; ++n) {
    QPoly phi = cyclotomic_polynomial(n);
    CHECK(phi == to_q(mobius_cyclotomic(n)));
    QPoly xn(n + 1);
    xn[0] = -1;
    xn[n] = 1;
    QPoly q, r;
    qpoly::divmod(xn, phi, q, r);
    CHECK(r.empty());
    QPoly prod{mpq_class(1)};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = qpoly::mul(prod, cyclotomic_polynomial(d));
    CHECK(prod == xn);
  }
}

TEST_CASE("scalar inverses") {
  const Field& q = Field::Q();
  CHECK(scalar_invert(Scalar(q, 3, 2)) == Scalar(q, 2, 3));
  const Field& f4 = Field::Qzeta(4);
  Scalar z = Scalar::zeta(f4);
  CHECK(scalar_invert(z) == -z);
  const Field& f3 = Field::Qzeta(3);
  Scalar z3 = Scalar::zeta(f3);
  Scalar one(f3, 1);
  // Hand reduction with zeta^2 = -1 - zeta: (1 + zeta)(-zeta) = -zeta - zeta^2 = 1.
  CHECK(scalar_invert(one + z3) == -z3);
  CHECK((one + z3) * (-z3) == one);
  CHECK_THROWS_AS(scalar_invert(Scalar(q)), Error);
  CHECK_THROWS_AS(scalar_invert(Scalar()), Error);
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(7);
  for (int n : {1, 3, 4, 5, 8, 12}) {
    const Field& f = n == 1 ? Field::Q() : Field::Qzeta(n);
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = testutil::random_scalar(rng, f), b = testutil::random_scalar(rng, f),
             c = testutil::random_scalar(rng, f);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(f, 1));
    }
  }
}

TEST_CASE("zeta has order N and Galois conjugation is multiplicative") {
  for (int n : {3, 4, 5, 6, 12}) {
    const Field& f = Field::Qzeta(n);
    Scalar z = Scalar::zeta(f);
    Scalar p(f, 1);
    for (int k = 0; k < n; ++k) p *= z;
    CHECK(p == Scalar(f, 1));
    std::mt19937 rng(n);
    Scalar a = testutil::random_scalar(rng, f), b = testutil::random_scalar(rng, f);
    for (long k = 1; k < n; ++k) {
      if (std::gcd(k, static_cast<long>(n)) != 1) continue;
      CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
    }
  }
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(to_q({-1, 0, 1})) == std::vector<mpq_class>{-1, 1});
  CHECK(rational_roots(to_q({1, 0, 1})).empty());
  QPoly p = to_q({1, 0, -3, 2});
  std::vector<mpq_class> oracle = synthetic_roots(p, {mpq_class(1), mpq_class(-1, 2), mpq_class(-1), mpq_class(1, 2)});
  CHECK(oracle == std::vector<mpq_class>{mpq_class(-1, 2), 1, 1});
  CHECK(rational_roots(p) == oracle);
  CHECK(rational_roots(to_q({0, 0, 3})) == std::vector<mpq_class>{0, 0});
  CHECK_THROWS_AS(rational_roots(QPoly{}), Error);
  // Large coefficients route through the Pollard fallback.
  QPoly big = qpoly::mul(QPoly{mpq_class(-1000003), mpq_class(999983)}, QPoly{mpq_class(7), mpq_class(1)});
  CHECK(rational_roots(big) == std::vector<mpq_class>{-7, mpq_class(1000003, 999983)});
}

TEST_CASE("kernel basis examples") {
  const Field& q = Field::Q();
  CHECK(kernel_basis(Matrix::identity(2, q)).empty());
  auto k0 = kernel_basis(Matrix(2, 2));
  CHECK(k0.size() == 2);
  Matrix m = testutil::qmatrix({{1, 1}, {2, 2}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
}

TEST_CASE("kernel basis and rank-nullity on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Matrix m = testutil::random_matrix(rng, r, c, Field::Q(), trial % 3 == 0 ? 2 : 0);
    auto ker = kernel_basis(m);
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    CHECK(rank(m) + ker.size() == c);
    CHECK(rank(Matrix::from_columns(ker, c)) == ker.size());
  }
}

TEST_CASE("split idempotent examples") {
  const Field& q = Field::Q();
  auto s = split_idempotent(Matrix::identity(3, q));
  CHECK(s.inject == Matrix::identity(3, q));
  CHECK(s.project == Matrix::identity(3, q));
  auto z = split_idempotent(Matrix(2, 2));
  CHECK(z.inject.cols() == 0);
  CHECK(z.project.rows() == 0);
  Matrix e = testutil::qmatrix({{1, 0}, {1, 0}});
  auto t = split_idempotent(e);
  CHECK(t.project * t.inject == Matrix::identity(1, q));
  CHECK(t.inject * t.project == e);
  CHECK_THROWS_AS(split_idempotent(testutil::qmatrix({{1, 1}, {0, 1}})), Error);
}

TEST_CASE("split idempotent on random conjugated projections") {
  std::mt19937 rng(3);
  int done = 0;
  while (done < 100) {
    std::size_t n = 1 + rng() % 5;
    Matrix p = testutil::random_matrix(rng, n, n, Field::Q(), 0);
    if (rank(p) != n) continue;
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 2) d(i, i) = Scalar(Field::Q(), 1);
    Matrix e = p * d * inverse(p);
    auto s = split_idempotent(e);
    CHECK(s.inject * s.project == e);
    CHECK(s.project * s.inject == Matrix::identity(s.inject.cols(), Field::Q()));
    CHECK(s.inject.cols() == rank(d));
    ++done;
  }
}

TEST_CASE("solve_affine and inverse") {
  Matrix a = testutil::qmatrix({{1, 2}, {3, 4}});
  Matrix inv = inverse(a);
  CHECK(a * inv == Matrix::identity(2, Field::Q()));
  CHECK_THROWS_AS(inverse(testutil::qmatrix({{1, 2}, {2, 4}})), Error);
  auto s = solve_affine(testutil::qmatrix({{1, 1}, {1, 1}}), {Scalar(Field::Q(), 1), Scalar(Field::Q(), 2)});
  CHECK(!s.consistent);
  auto t = solve_affine(testutil::qmatrix({{1, 1}}), {Scalar(Field::Q(), 3)});
  CHECK(t.consistent);
  CHECK(t.homogeneous.size() == 1);
}

TEST_CASE("characteristic polynomial over Q(zeta_4)") {
  const Field& f = Field::Qzeta(4);
  Matrix m(2, 2);
  m(0, 1) = Scalar(f, -1);
  m(1, 0) = Scalar(f, 1);
  auto cp = characteristic_polynomial(m);  // x^2 + 1
  CHECK(cp[0] == Scalar(f, 1));
  CHECK(cp[1].is_zero());
  CHECK(cp[2] == Scalar(f, 1));
}
