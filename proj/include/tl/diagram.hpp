// Planar (Temperley-Lieb) diagrams: noncrossing perfect matchings on 2n
// boundary points, with composition, loop deletion and the star involution.
//
// Endpoint encoding: 0..2n-1 around the boundary; bottom points are 0..n-1
// left to right, top points are n..2n-1 right to left, so the top point above
// bottom j is 2n-1-j and "noncrossing" is exactly the balanced-bracket
// property of the pairing read along 0..2n-1.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tl {

class PlanarDiagram {
 public:
  // Validates (perfect matching, noncrossing) and interns; equal diagrams
  // share one canonical representation.
  static PlanarDiagram from_pairing(int n, std::vector<std::uint16_t> pairing);
  static PlanarDiagram identity(int n);
  // The generator e_i (1 <= i <= n-1): i pairs i+1 on the bottom, likewise on
  // the top, all other strands vertical.
  static PlanarDiagram generator(int n, int i);

  int n() const;
  int partner(int p) const;
  const std::vector<std::uint16_t>& pairing() const;

  int bottom_arc_count() const;  // pairs with both endpoints on the bottom
  bool is_identity() const;

  // Interned: equality is pointer equality.
  bool operator==(const PlanarDiagram& o) const { return rep_ == o.rep_; }
  // Deterministic order: (n, pairing) lexicographic.
  bool operator<(const PlanarDiagram& o) const;

  std::size_t hash() const;

  // The same diagram viewed in A_{new_n} with through-strands appended on the
  // right (the tower embedding).
  PlanarDiagram embedded(int new_n) const;

  std::string str() const;

 private:
  struct Rep;
  explicit PlanarDiagram(const Rep* rep) : rep_(rep) {}
  const Rep* rep_;
};

struct DiagramHash {
  std::size_t operator()(const PlanarDiagram& d) const { return d.hash(); }
};

// Stacks a above b, traces strands, deletes closed loops; the algebra product
// is x^loops * diagram. Throws on size mismatch.
std::pair<PlanarDiagram, int> compose(const PlanarDiagram& a, const PlanarDiagram& b);

// Vertical flip; the anti-involution fixing every e_i.
PlanarDiagram star(const PlanarDiagram& d);

// All noncrossing perfect matchings on 2n points, lexicographic by pairing;
// the count is the Catalan number C_n.
std::vector<PlanarDiagram> enumerate_diagrams(int n);

std::uint64_t catalan(int n);

// Left-to-right product of generators e_{word[0]} e_{word[1]} ...; the result
// of a generator word is always a single diagram with coefficient x^c.
std::pair<PlanarDiagram, int> compose_word(int n, const std::vector<int>& word);

}  // namespace tl
