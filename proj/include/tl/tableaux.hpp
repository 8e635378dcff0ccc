// Partitions (f, n-2f), dominance, up-down tableaux (Bratteli paths),
// dimensions and the tableau <-> half-diagram correspondence.
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tl {

// The pair (f, n-2f): f arcs, m = n-2f through-strands.
struct Partition {
  int f = 0;
  int m = 0;
  int n() const { return 2 * f + m; }
  auto operator<=>(const Partition&) const = default;
  std::string str() const;
};

// All (i, n-2i), decreasing dominance order (largest f first).
std::vector<Partition> partitions_of(int n);

// lambda dominates mu iff lambda.f >= mu.f; throws on size mismatch.
bool dominates(const Partition& a, const Partition& b);

// A path (0,0) = lambda^(0) -> ... -> lambda^(n) in the Bratteli diagram,
// stored as the f-value at each level (the m-values are forced).
class UpDownTableau {
 public:
  explicit UpDownTableau(std::vector<int> fseq);

  int n() const { return static_cast<int>(fseq_.size()) - 1; }
  const std::vector<int>& fseq() const { return fseq_; }
  Partition shape_at(int k) const;
  Partition shape() const { return shape_at(n()); }
  // true if step k-1 -> k added an arc (f grew), false if it added a defect
  bool arc_step(int k) const;
  UpDownTableau restricted(int k) const;

  bool operator==(const UpDownTableau& o) const { return fseq_ == o.fseq_; }
  auto operator<=>(const UpDownTableau& o) const { return fseq_ <=> o.fseq_; }

  std::string str() const;

 private:
  std::vector<int> fseq_;
};

// s dominates t iff shape(s|_k) dominates shape(t|_k) for every k.
bool dominates(const UpDownTableau& s, const UpDownTableau& t);

// All paths ending at lambda, sorted descending lexicographically by fseq
// (which refines the dominance order); the first element is t^lambda.
// Results are cached per (n, lambda); the returned storage is stable.
const std::vector<UpDownTableau>& enumerate_tableaux(int n, const Partition& lambda);

// Path count = C(n,f) - C(n,f-1), computed by dynamic programming.
std::uint64_t dim_of(int n, const Partition& lambda);

// Noncrossing matching of n points with f arcs and n-2f unpaired defects;
// the concrete model of the cell-module basis. Points are 1-based.
struct HalfDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;  // (a,b) with a<b, sorted by a
  std::vector<int> defects;               // ascending

  bool operator==(const HalfDiagram&) const = default;
  std::string str() const;
};

// The bottom half of the diagram of m_lambda v_t: an arc step at level k
// closes an arc from k to the rightmost open point.
HalfDiagram half_diagram_of(const UpDownTableau& t);

// Inverse of half_diagram_of.
UpDownTableau tableau_of_half_diagram(const HalfDiagram& h);

}  // namespace tl
