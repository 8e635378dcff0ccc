// Rational functions in Q(x) as reduced fractions of Z[x] polynomials.
#pragma once

#include "tl/poly.hpp"

namespace tl {

// Canonical form: den != 0, gcd(num, den) = 1 in Z[x] (common polynomial
// factors and common integer content both removed), den has positive leading
// coefficient. Equality is therefore structural and agrees with
// cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(IntPoly n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(long n) : num_(n), den_(1) {}
  RatFunc(IntPoly n, IntPoly d);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == IntPoly(1); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  RatFunc inverse() const;
  RatFunc pow(int k) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const RatFunc& o) const;

  std::string str() const;

 private:
  void reduce();
  IntPoly num_, den_;
};

}  // namespace tl
