#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ybe {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Integer>;

unsigned euler_phi(unsigned n);
unsigned lcm_u(unsigned a, unsigned b);

// The n-th cyclotomic polynomial, obtained by dividing x^n - 1 by every
// Phi_d with d | n, d < n. Results are memoized per thread.
const IntPoly& cyclotomic_polynomial(unsigned n);

// An element of the cyclotomic field Q(zeta_N), stored as a polynomial in
// zeta_N of degree < phi(N), reduced modulo Phi_N.
//
// Binary operations between elements of different moduli are carried out in
// Q(zeta_L), L = lcm of the two moduli. Equality is field equality, so
// zeta(4)^2 == CycNum(-1) holds even though the moduli differ.
class CycNum {
 public:
  CycNum();  // zero of Q
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)
  CycNum(long value);             // NOLINT(google-explicit-constructor)

  // zeta_N^k for any integer k.
  static CycNum zeta(unsigned modulus, long k = 1);
  // Builds from raw coefficients of 1, zeta, zeta^2, ... (any length); the
  // result is reduced modulo Phi_N.
  static CycNum from_coefficients(unsigned modulus, std::vector<Rational> coeffs);

  unsigned modulus() const { return modulus_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Same field element viewed in Q(zeta_M); M must be a multiple of modulus().
  CycNum in_field(unsigned m) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Precondition: is_rational().
  Rational rational_value() const;

  CycNum inverse() const;  // throws DivisionByZero
  // Complex conjugation, zeta -> zeta^{-1}.
  CycNum conjugate() const;
  CycNum pow(long e) const;

  // The roots of unity of Q(zeta_N) are exactly the lcm(2,N)-th roots of
  // unity, so this tests x^{lcm(2,N)} == 1.
  bool is_root_of_unity() const;
  // Least k >= 0 with x == zeta_M^k, M = lcm(2, modulus()), if any.
  std::optional<unsigned> root_of_unity_exponent() const;

  // "1", "-1", "3/2", "-zeta(3)^2", "2*zeta(5)^1", or a sum of such terms.
  std::string to_string() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

 private:
  CycNum(unsigned modulus, std::vector<Rational> coeffs);
  void reduce();

  unsigned modulus_ = 1;
  std::vector<Rational> coeffs_;  // length phi(modulus_)
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

// Field adaptors used by the generic matrix code.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const CycNum& x) { return x.is_zero(); }
Rational inverse(const Rational& x);  // throws DivisionByZero
inline CycNum inverse(const CycNum& x) { return x.inverse(); }
std::string to_string(const Rational& x);
inline std::string to_string(const CycNum& x) { return x.to_string(); }

}  // namespace ybe
