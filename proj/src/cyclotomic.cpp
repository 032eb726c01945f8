#include "ybe/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Quotient and remainder of a / b over Q; b must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly quot(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (sgn(a[i]) == 0) continue;
    Rational c = a[i] / lead;
    std::size_t shift = i - (b.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(quot);
  return {quot, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Reduces p in place modulo the monic integer polynomial `phi`.
void reduce_mod(RatPoly& p, const IntPoly& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (sgn(p[i]) == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(phi[j]) != 0) p[i - d + j] -= c * phi[j];
    }
    p[i] = 0;
  }
  p.resize(d);
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

const IntPoly& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InvalidInput("cyclotomic_polynomial: n must be positive");
  thread_local std::map<unsigned, IntPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // x^n - 1 divided by Phi_d for every proper divisor d. Every divisor is
  // monic with integer coefficients, so exact integer long division suffices.
  IntPoly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPoly& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    IntPoly quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
      Integer c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

CycNum::CycNum() : modulus_(1), coeffs_(1) {}

CycNum::CycNum(const Rational& value) : modulus_(1), coeffs_{value} {}

CycNum::CycNum(long value) : modulus_(1), coeffs_{Rational(value)} {}

CycNum::CycNum(unsigned modulus, std::vector<Rational> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  reduce();
}

void CycNum::reduce() {
  const IntPoly& phi = cyclotomic_polynomial(modulus_);
  const std::size_t d = phi.size() - 1;
  if (coeffs_.size() < d) {
    coeffs_.resize(d);
    return;
  }
  reduce_mod(coeffs_, phi);
}

CycNum CycNum::zeta(unsigned modulus, long k) {
  if (modulus == 0) throw InvalidInput("zeta: modulus must be positive");
  long m = static_cast<long>(modulus);
  long e = ((k % m) + m) % m;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = 1;
  return CycNum(modulus, std::move(c));
}

CycNum CycNum::from_coefficients(unsigned modulus, std::vector<Rational> coeffs) {
  if (modulus == 0) throw InvalidInput("from_coefficients: modulus must be positive");
  return CycNum(modulus, std::move(coeffs));
}

CycNum CycNum::in_field(unsigned m) const {
  if (m == modulus_) return *this;
  if (m == 0 || m % modulus_ != 0) {
    throw InvalidInput("in_field: target modulus must be a multiple of the source modulus");
  }
  const unsigned step = m / modulus_;
  std::vector<Rational> c((coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return CycNum(m, std::move(c));
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational CycNum::rational_value() const {
  if (!is_rational()) throw InvalidInput("rational_value: element is not rational");
  return coeffs_[0];
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {
std::pair<CycNum, CycNum> common_field(const CycNum& a, const CycNum& b) {
  unsigned m = lcm_u(a.modulus(), b.modulus());
  return {a.in_field(m), b.in_field(m)};
}
}  // namespace

CycNum& CycNum::operator+=(const CycNum& rhs) {
  if (rhs.modulus_ != modulus_) {
    auto [a, b] = common_field(*this, rhs);
    return *this = a += b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
  if (rhs.modulus_ != modulus_) {
    auto [a, b] = common_field(*this, rhs);
    return *this = a -= b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
  if (rhs.modulus_ != modulus_) {
    auto [a, b] = common_field(*this, rhs);
    return *this = a *= b;
  }
  if (coeffs_.size() == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  coeffs_ = mul(coeffs_, rhs.coeffs_);
  reduce();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.modulus_ == b.modulus_) return a.coeffs_ == b.coeffs_;
  auto [x, y] = common_field(a, b);
  return x.coeffs_ == y.coeffs_;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (coeffs_.size() == 1) return CycNum(modulus_, {Rational(1) / coeffs_[0]});

  // Extended Euclid in Q[x] against Phi_N, which is irreducible, so the
  // final remainder is a nonzero constant.
  const IntPoly& phi = cyclotomic_polynomial(modulus_);
  RatPoly r0(phi.begin(), phi.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    RatPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a constant c with a * s0 == c (mod Phi_N).
  Rational c = r0.at(0);
  for (auto& v : s0) v /= c;
  return CycNum(modulus_, std::move(s0));
}

CycNum CycNum::conjugate() const {
  std::vector<Rational> c(modulus_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[(modulus_ - i) % modulus_] += coeffs_[i];
  }
  return CycNum(modulus_, std::move(c));
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this;
  CycNum result = CycNum(1).in_field(modulus_);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool CycNum::is_root_of_unity() const {
  if (is_zero()) return false;
  return pow(static_cast<long>(lcm_u(2, modulus_))).is_one();
}

std::optional<unsigned> CycNum::root_of_unity_exponent() const {
  const unsigned m = lcm_u(2, modulus_);
  CycNum z = zeta(m, 0);
  const CycNum step = zeta(m, 1);
  for (unsigned k = 0; k < m; ++k) {
    if (z == *this) return k;
    z *= step;
  }
  return std::nullopt;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string CycNum::to_string() const {
  if (is_rational()) return ybe::to_string(coeffs_[0]);

  auto monomial = [this](const Rational& c, unsigned k) {
    std::string z = "zeta(" + std::to_string(modulus_) + ")^" + std::to_string(k);
    if (c == 1) return z;
    if (c == -1) return "-" + z;
    return ybe::to_string(c) + "*" + z;
  };

  // Prefer a single monomial c*zeta^k, with a positive c when possible.
  std::optional<std::pair<Rational, unsigned>> negative;
  for (unsigned k = 1; k < modulus_; ++k) {
    CycNum y = *this * zeta(modulus_, -static_cast<long>(k));
    if (!y.is_rational()) continue;
    Rational c = y.rational_value();
    if (sgn(c) > 0) return monomial(c, k);
    if (!negative) negative.emplace(c, k);
  }
  if (negative) return monomial(negative->first, negative->second);

  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    std::string term = i == 0 ? ybe::to_string(c) : monomial(c, static_cast<unsigned>(i));
    if (!first) {
      if (term.front() == '-') {
        os << " - " << term.substr(1);
        first = false;
        continue;
      }
      os << " + ";
    }
    os << term;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

Rational inverse(const Rational& x) {
  if (sgn(x) == 0) throw DivisionByZero("inverse of zero rational");
  return Rational(1) / x;
}

}  // namespace ybe
