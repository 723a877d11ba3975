#include "wba/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "wba/errors.hpp"

namespace wba {

namespace qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  QPoly d = b;
  trim(d);
  if (d.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, mpq_class(0));
  const mpq_class lead = d.back();
  while (!rem.empty() && rem.size() >= d.size()) {
    std::size_t shift = rem.size() - d.size();
    mpq_class c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= c * d[i];
    trim(rem);
  }
  trim(quot);
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::string to_string(const QPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0) continue;
    mpq_class c = p[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qpoly

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorCode::ParseError, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, QPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  QPoly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    QPoly q, r;
    qpoly::divmod(num, cyclotomic_polynomial(d), q, r);
    num = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, num);
  return num;
}

namespace {

void factor_into(mpz_class n, std::map<mpz_class, int>& out);

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[mpz_class(p)]++;
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out[n]++;
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::map<mpz_class, int> f;
  factor_into(abs(n), f);
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : f) {
    std::size_t cur = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Divide p by (x - r) assuming r is a root.
QPoly deflate(const QPoly& p, const mpq_class& r) {
  QPoly q(p.size() - 1);
  mpq_class carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<mpq_class> rational_roots(const QPoly& p0) {
  QPoly p = p0;
  qpoly::trim(p);
  if (p.empty()) throw Error(ErrorCode::ZeroPolynomial, "rational_roots of the zero polynomial");
  std::vector<mpq_class> roots;
  while (p.size() > 1 && p[0] == 0) {
    roots.emplace_back(0);
    p.erase(p.begin());
  }
  if (p.size() > 1) {
    // Primitive integer form: clear denominators.
    mpz_class l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> a;
    for (const auto& c : p) a.emplace_back(mpz_class(c * l));
    std::vector<mpz_class> num_divs = divisors(a.front());
    std::vector<mpz_class> den_divs = divisors(a.back());
    for (const auto& q : den_divs) {
      for (const auto& n : num_divs) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          mpq_class r(sign * n, q);
          r.canonicalize();
          while (p.size() > 1 && qpoly::eval(p, r) == 0) {
            roots.push_back(r);
            p = deflate(p, r);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Field::Field(Kind kind, int n) : kind_(kind), n_(n) {
  modulus_ = cyclotomic_polynomial(n);
  deg_ = qpoly::degree(modulus_);
  int limit = std::max(n_, 2 * deg_);
  xpow_.reserve(limit);
  std::vector<mpq_class> cur(deg_, mpq_class(0));
  cur[0] = 1;
  for (int k = 0; k < limit; ++k) {
    xpow_.push_back(cur);
    // multiply by x and reduce by the monic modulus
    mpq_class top = cur[deg_ - 1];
    for (int i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < deg_; ++i) cur[i] -= top * modulus_[i];
  }
}

const Field& Field::Q() {
  static const Field q(Kind::Rationals, 1);
  return q;
}

const Field& Field::Qzeta(int n) {
  if (n < 1) throw Error(ErrorCode::ParseError, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[n];
  if (!slot) slot.reset(new Field(Kind::Cyclotomic, n));
  return *slot;
}

const std::vector<mpq_class>& Field::power(long e) const {
  long m = e % n_;
  if (m < 0) m += n_;
  return xpow_[static_cast<std::size_t>(m)];
}

std::string Field::describe() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "Q(zeta_" + std::to_string(n_) + ")";
}

Scalar::Scalar(const Field& f, const mpq_class& q) : f_(&f) {
  if (q != 0) c_.push_back(q);
}

Scalar::Scalar(const Field& f, long num, long den) : f_(&f) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  if (q != 0) c_.push_back(q);
}

Scalar::Scalar(const Field& f, const std::vector<mpq_class>& coeffs) : f_(&f) {
  const int deg = f.degree();
  if (static_cast<int>(coeffs.size()) <= deg) {
    c_.assign(coeffs.begin(), coeffs.end());
  } else if (static_cast<int>(coeffs.size()) <= std::max(f.order(), 2 * deg)) {
    c_.assign(deg, mpq_class(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      const auto& red = f.xpow(static_cast<int>(k));
      for (int i = 0; i < deg; ++i) c_[i] += coeffs[k] * red[i];
    }
  } else {
    QPoly q, r;
    qpoly::divmod(QPoly(coeffs.begin(), coeffs.end()), f.modulus(), q, r);
    c_.assign(r.begin(), r.end());
  }
  normalize();
}

Scalar Scalar::zeta(const Field& f, long k) { return Scalar(f, f.power(k)); }

bool Scalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

mpq_class Scalar::rational() const {
  if (c_.empty()) return 0;
  if (c_.size() != 1) throw Error(ErrorCode::FieldMismatch, "scalar " + str() + " is not rational");
  return c_[0];
}

std::vector<mpq_class> Scalar::coeffs() const {
  int deg = f_ ? f_->degree() : 1;
  std::vector<mpq_class> out(deg, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  return out;
}

void Scalar::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Field* Scalar::join(const Scalar& a, const Scalar& b) {
  if (!a.f_) return b.f_;
  if (!b.f_ || a.f_ == b.f_) return a.f_;
  throw Error(ErrorCode::FieldMismatch, a.f_->describe() + " vs " + b.f_->describe());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  f_ = join(*this, o);
  if (o.c_.empty()) return *this;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  f_ = join(*this, o);
  if (o.c_.empty()) return *this;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.f_ = Scalar::join(a, b);
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.c_.size() == 1 && b.c_.size() == 1) {
    r.c_.push_back(a.c_[0] * b.c_[0]);
    return r;
  }
  const Field& f = *r.f_;
  const int deg = f.degree();
  std::vector<mpq_class> prod(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  r.c_.assign(static_cast<std::size_t>(deg), mpq_class(0));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    if (static_cast<int>(k) < deg) {
      r.c_[k] += prod[k];
    } else {
      const auto& red = f.xpow(static_cast<int>(k));
      for (int i = 0; i < deg; ++i) r.c_[i] += prod[k] * red[i];
    }
  }
  r.normalize();
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.c_.empty() && b.c_.empty()) return true;
  Scalar::join(a, b);
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Scalar Scalar::inverse() const {
  if (c_.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (c_.size() == 1) {
    Scalar r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Extended Euclid against the modulus; s_i * a = r_i mod Phi_N throughout.
  QPoly r0 = f_->modulus();
  QPoly r1(c_.begin(), c_.end());
  QPoly s0, s1{mpq_class(1)};
  while (qpoly::degree(r1) > 0) {
    QPoly q, r;
    qpoly::divmod(r0, r1, q, r);
    QPoly s = qpoly::sub(s0, qpoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "non-invertible cyclotomic element");
  mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return Scalar(*f_, std::vector<mpq_class>(s1.begin(), s1.end()));
}

Scalar Scalar::galois(long k) const {
  if (c_.size() <= 1) return *this;
  const int deg = f_->degree();
  std::vector<mpq_class> out(deg, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& z = f_->power(static_cast<long>(i) * k);
    for (int j = 0; j < deg; ++j) out[j] += c_[i] * z[j];
  }
  return Scalar(*f_, out);
}

std::string Scalar::str() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpq_class a = abs(c_[k]);
    if (!first) os << (c_[k] < 0 ? "-" : "+");
    else if (c_[k] < 0) os << "-";
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Scalar scalar_invert(const Scalar& a) { return a.inverse(); }

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotFrobenius: return "NotFrobenius";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::AmbiguousSolutionSet: return "AmbiguousSolutionSet";
    case ErrorCode::AntipodeAxiomFailure: return "AntipodeAxiomFailure";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::MorphismCheckFailed: return "MorphismCheckFailed";
    case ErrorCode::NotAFunctor: return "NotAFunctor";
    case ErrorCode::NotCocommutative: return "NotCocommutative";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::MonoidLawFailure: return "MonoidLawFailure";
    case ErrorCode::IdempotentFailure: return "IdempotentFailure";
    case ErrorCode::RMismatch: return "RMismatch";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::LawFailure: return "LawFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace wba
