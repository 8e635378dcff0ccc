#include "tl/element.hpp"

namespace tl {

TLInt word_to_element(int n, const std::vector<int>& word) {
  auto [d, loops] = compose_word(n, word);
  return TLInt::from_diagram(d, coeff_x_power<IntPoly>(loops));
}

}  // namespace tl
