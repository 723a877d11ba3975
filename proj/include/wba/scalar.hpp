#pragma once

// Exact scalars over Q and the cyclotomic fields Q(zeta_N).

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <string>
#include <vector>

namespace wba {

// Rational polynomial, coefficient of x^k at index k, no trailing zeros.
using QPoly = std::vector<mpq_class>;

namespace qpoly {
void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
// Euclidean division; throws DivisionByZero when b is zero.
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
mpq_class eval(const QPoly& p, const mpq_class& x);
std::string to_string(const QPoly& p);
}  // namespace qpoly

// Phi_N, monic of degree phi(N).
QPoly cyclotomic_polynomial(int n);

// All rational roots, repeated according to multiplicity, ascending.
std::vector<mpq_class> rational_roots(const QPoly& p);

// Interned field descriptor; compare by address.
class Field {
 public:
  enum class Kind { Rationals, Cyclotomic };

  static const Field& Q();
  static const Field& Qzeta(int n);

  Kind kind() const { return kind_; }
  int order() const { return n_; }  // N for Q(zeta_N), 1 for Q
  int degree() const { return deg_; }
  const QPoly& modulus() const { return modulus_; }
  // zeta^e reduced mod Phi_N, as a length-degree coefficient vector.
  const std::vector<mpq_class>& power(long e) const;
  // x^k reduced mod Phi_N for 0 <= k < reduce_limit().
  const std::vector<mpq_class>& xpow(int k) const { return xpow_[k]; }
  std::string describe() const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(Kind kind, int n);

  Kind kind_;
  int n_;
  int deg_;
  QPoly modulus_;
  std::vector<std::vector<mpq_class>> xpow_;  // up to max(N, 2*deg)
};

class Scalar {
 public:
  using Coeffs = boost::container::small_vector<mpq_class, 1>;

  // The zero of any field.
  Scalar() = default;
  explicit Scalar(const Field& f) : f_(&f) {}
  Scalar(const Field& f, const mpq_class& q);
  Scalar(const Field& f, long num, long den = 1);
  Scalar(const Field& f, const std::vector<mpq_class>& coeffs);

  static Scalar zeta(const Field& f, long k = 1);

  const Field* field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const { return c_.size() <= 1; }
  mpq_class rational() const;  // throws FieldMismatch when not in Q
  std::vector<mpq_class> coeffs() const;  // length = field degree

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  // The Galois automorphism zeta -> zeta^k (k coprime to N).
  Scalar galois(long k) const;
  std::string str() const;

 private:
  static const Field* join(const Scalar& a, const Scalar& b);
  void normalize();

  const Field* f_ = nullptr;
  Coeffs c_;
};

Scalar scalar_invert(const Scalar& a);

}  // namespace wba
