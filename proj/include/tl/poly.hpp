// Dense univariate polynomials over Z with arbitrary-precision coefficients.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace tl {

using BigInt = mpz_class;

// Element of Z[x]. Coefficients ascending by degree, no trailing zeros;
// the empty coefficient vector is 0.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(long c) { if (c != 0) c_.emplace_back(c); }
  explicit IntPoly(BigInt c) { if (c != 0) c_.push_back(std::move(c)); }

  static IntPoly x() { return monomial(BigInt(1), 1); }
  static IntPoly monomial(BigInt c, int deg);
  static IntPoly from_coeffs(std::vector<BigInt> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  BigInt coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator*(const BigInt& s) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  // Deterministic total order (degree, then coefficients from the top).
  std::strong_ordering operator<=>(const IntPoly& o) const;

  IntPoly pow(unsigned k) const;
  BigInt eval(const BigInt& a) const;
  IntPoly shift_up(int k) const;  // multiply by x^k

  // gcd of coefficients, >= 0 (0 for the zero polynomial)
  BigInt content() const;
  IntPoly primitive_part() const;
  IntPoly divexact_scalar(const BigInt& s) const;

  // Quotient a/b when b divides a exactly in Z[x]; throws std::domain_error
  // otherwise.
  static IntPoly divexact(const IntPoly& a, const IntPoly& b);
  // gcd in Z[x] (subresultant-free primitive PRS), leading coefficient > 0.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  std::string str() const;  // e.g. "x^4 - 3*x^2 + 1"

 private:
  void normalize();
  std::vector<BigInt> c_;
};

}  // namespace tl
