// Finite linear combinations of planar diagrams with Z[x] or Q(x)
// coefficients; the algebra product collects x per deleted loop.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/poly.hpp"
#include "tl/ratfunc.hpp"

namespace tl {

template <class C>
C coeff_x_power(int k);

template <>
inline IntPoly coeff_x_power<IntPoly>(int k) {
  return IntPoly::monomial(BigInt(1), k);
}
template <>
inline RatFunc coeff_x_power<RatFunc>(int k) {
  return RatFunc(IntPoly::monomial(BigInt(1), k));
}

template <class C>
inline bool coeff_is_zero(const C& c) {
  return c.is_zero();
}

// Element of the diagram algebra on n points. Zero coefficients are absent;
// the zero element has an empty term map. Diagram keys are in the canonical
// (n, pairing) order, so iteration and equality are deterministic.
template <class C>
class TLElement {
 public:
  explicit TLElement(int n) : n_(n) {}
  static TLElement zero(int n) { return TLElement(n); }
  static TLElement unit(int n) { return from_diagram(PlanarDiagram::identity(n), C(IntPoly(1))); }
  static TLElement from_diagram(const PlanarDiagram& d, C coeff = C(IntPoly(1))) {
    TLElement e(d.n());
    e.add_term(d, std::move(coeff));
    return e;
  }
  static TLElement gen(int n, int i) { return from_diagram(PlanarDiagram::generator(n, i)); }

  int n() const { return n_; }
  const std::map<PlanarDiagram, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const PlanarDiagram& d, C coeff) {
    if (d.n() != n_) throw std::invalid_argument("TLElement: size mismatch");
    accumulate(d, std::move(coeff));
  }

  C coeff_of(const PlanarDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? C() : it->second;
  }

  TLElement& operator+=(const TLElement& o) {
    check(o);
    for (const auto& [d, c] : o.terms_) accumulate(d, c);
    return *this;
  }
  TLElement& operator-=(const TLElement& o) {
    check(o);
    for (const auto& [d, c] : o.terms_) accumulate(d, C() - c);
    return *this;
  }
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  TLElement operator-() const {
    TLElement r(n_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, C() - c);
    return r;
  }

  TLElement operator*(const C& s) const {
    TLElement r(n_);
    if (coeff_is_zero(s)) return r;
    for (const auto& [d, c] : terms_) {
      C v = c * s;
      if (!coeff_is_zero(v)) r.terms_.emplace(d, std::move(v));
    }
    return r;
  }

  friend TLElement operator*(const TLElement& a, const TLElement& b) {
    a.check(b);
    TLElement r(a.n_);
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) {
        auto [d, loops] = compose(da, db);
        r.accumulate(d, ca * cb * coeff_x_power<C>(loops));
      }
    return r;
  }

  bool operator==(const TLElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  friend TLElement star(const TLElement& e) {
    TLElement r(e.n_);
    for (const auto& [d, c] : e.terms_) r.terms_.emplace(star(d), c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*" + d.str();
    }
    return s;
  }

 private:
  void check(const TLElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("TLElement: size mismatch");
  }
  void accumulate(const PlanarDiagram& d, C v) {
    if (coeff_is_zero(v)) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, std::move(v));
    } else {
      it->second += v;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  int n_;
  std::map<PlanarDiagram, C> terms_;
};

using TLInt = TLElement<IntPoly>;
using TLRat = TLElement<RatFunc>;

// Evaluates a generator word to x^c * D (always a single diagram).
TLInt word_to_element(int n, const std::vector<int>& word);

}  // namespace tl
