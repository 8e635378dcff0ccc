// The Murphy cellular basis m_uv = v_u* m_lambda v_v, its bijection onto the
// diagram basis, and the arc-count filtration.
#pragma once

#include <unordered_map>
#include <vector>

#include "tl/element.hpp"
#include "tl/report.hpp"
#include "tl/tableaux.hpp"

namespace tl {

// A word in the generators e_1..e_{n-1}, kept unreduced; equality of words is
// always tested after evaluation to diagrams.
struct GeneratorWord {
  int n = 0;
  std::vector<int> letters;  // 1-based generator indices
};

// w_{i,j} = e_i e_{i+1} ... e_{j-1} if i<j, e_{i-1} e_{i-2} ... e_j if j<i,
// and the empty word otherwise.
GeneratorWord w_word(int n, int i, int j);

// m_lambda = e_1 e_3 ... e_{2f-1} (f commuting factors).
GeneratorWord m_lambda_word(int n, const Partition& lambda);
TLInt m_lambda(int n, const Partition& lambda);

// The recursive word v_t: an arc step at level k with f arcs contributes
// w_{2f,k} on the left of the word built so far. vstar_word is its reversal.
GeneratorWord v_word(const UpDownTableau& t);
GeneratorWord vstar_word(const UpDownTableau& t);

struct MurphyIndex {
  Partition lambda;
  UpDownTableau u, v;
};

// v_u* m_lambda v_v evaluated through the diagram calculus; always a single
// diagram with coefficient 1.
TLInt murphy_element(const MurphyIndex& idx);
// The underlying diagram; throws std::logic_error if a loop appears.
PlanarDiagram murphy_diagram(const MurphyIndex& idx);

// Number of bottom-bottom arcs; a diagram lies in the ideal spanned by
// partitions above (f, n-2f) exactly when arc_grade > f.
int arc_grade(const PlanarDiagram& d);

// The bottom (resp. top) half of a diagram as a half-diagram on n points;
// the top half is read mirrored, so m_uv has bottom half v and top half u.
HalfDiagram bottom_half(const PlanarDiagram& d);
HalfDiagram top_half(const PlanarDiagram& d);

// Computes every m_uv, asserting each is loop-free, that all diagrams are
// distinct, and that the count is the Catalan number: the basis-freeness
// proof at runtime. Throws std::logic_error on any violation.
struct MurphyBijection {
  int n = 0;
  std::unordered_map<PlanarDiagram, MurphyIndex, DiagramHash> index_of;
};
MurphyBijection murphy_bijection(int n);

// Right multiplication by e_k maps m_lambda v_u either to a single
// m_lambda v_v (times a power of x) with v independent of any left factor
// v_s*, or into the higher ideal; verified by expansion for all lambda, u, k.
CheckReport triangular_right_action_check(int n);

}  // namespace tl
