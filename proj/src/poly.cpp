#include "tl/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace tl {

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(BigInt c, int deg) {
  IntPoly p;
  if (c == 0) return p;
  if (deg < 0) throw std::invalid_argument("monomial: negative degree");
  p.c_.assign(static_cast<std::size_t>(deg) + 1, BigInt(0));
  p.c_.back() = std::move(c);
  return p;
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> c) {
  IntPoly p;
  p.c_ = std::move(c);
  p.normalize();
  return p;
}

BigInt IntPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return BigInt(0);
  return c_[static_cast<std::size_t>(d)];
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of 0");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  IntPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly IntPoly::operator*(const BigInt& s) const {
  if (s == 0) return IntPoly();
  IntPoly r(*this);
  for (auto& v : r.c_) v *= s;
  return r;
}

std::strong_ordering IntPoly::operator<=>(const IntPoly& o) const {
  if (c_.size() != o.c_.size())
    return c_.size() < o.c_.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = c_.size(); i-- > 0;) {
    int c = mpz_cmp(c_[i].get_mpz_t(), o.c_[i].get_mpz_t());
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPoly IntPoly::pow(unsigned k) const {
  IntPoly r(1);
  IntPoly base(*this);
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

BigInt IntPoly::eval(const BigInt& a) const {
  BigInt r(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= a;
    r += c_[i];
  }
  return r;
}

IntPoly IntPoly::shift_up(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw std::invalid_argument("shift_up: negative shift");
  IntPoly r;
  r.c_.assign(static_cast<std::size_t>(k), BigInt(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::divexact_scalar(const BigInt& s) const {
  if (s == 0) throw std::domain_error("division by zero scalar");
  IntPoly r(*this);
  for (auto& v : r.c_) {
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    if (rem != 0) throw std::domain_error("inexact scalar division");
    v = q;
  }
  return r;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt c = content();
  if (leading() < 0) c = -c;
  return divexact_scalar(c);
}

IntPoly IntPoly::divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem = a.c_;
  const int dq = a.degree() - b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(dq) + 1, BigInt(0));
  for (int d = dq; d >= 0; --d) {
    BigInt& top = rem[static_cast<std::size_t>(d + b.degree())];
    if (top == 0) continue;
    BigInt co, r2;
    mpz_tdiv_qr(co.get_mpz_t(), r2.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    if (r2 != 0) throw std::domain_error("inexact polynomial division");
    q[static_cast<std::size_t>(d)] = co;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(d + j)] -= co * b.c_[static_cast<std::size_t>(j)];
  }
  for (const auto& v : rem)
    if (v != 0) throw std::domain_error("inexact polynomial division");
  return from_coeffs(std::move(q));
}

namespace {

// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a mod b.
IntPoly prem(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    IntPoly t = (b * a.leading()).shift_up(shift);
    a = a * b.leading() - t;
  }
  return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  BigInt cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  // primitive PRS
  while (!v.is_zero()) {
    IntPoly r = prem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  return u * cont;  // u is primitive with positive leading coefficient
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& v = c_[static_cast<std::size_t>(d)];
    if (v == 0) continue;
    BigInt av = v < 0 ? BigInt(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (d == 0 || av != 1) os << av.get_str();
    if (d > 0) {
      if (av != 1) os << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace tl
