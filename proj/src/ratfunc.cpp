#include "tl/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace tl {

RatFunc::RatFunc(IntPoly n, IntPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  if (!(g == IntPoly(1))) {
    num_ = IntPoly::divexact(num_, g);
    den_ = IntPoly::divexact(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  // cross-cancel before multiplying to keep intermediates small
  IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
  IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
  IntPoly n1 = g1 == IntPoly(1) ? a.num_ : IntPoly::divexact(a.num_, g1);
  IntPoly d2 = g1 == IntPoly(1) ? b.den_ : IntPoly::divexact(b.den_, g1);
  IntPoly n2 = g2 == IntPoly(1) ? b.num_ : IntPoly::divexact(b.num_, g2);
  IntPoly d1 = g2 == IntPoly(1) ? a.den_ : IntPoly::divexact(a.den_, g2);
  return RatFunc(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc r((IntPoly(1)));
  RatFunc base(*this);
  unsigned e = static_cast<unsigned>(k);
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

std::strong_ordering RatFunc::operator<=>(const RatFunc& o) const {
  if (auto c = den_ <=> o.den_; c != std::strong_ordering::equal) return c;
  return num_ <=> o.num_;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace tl
