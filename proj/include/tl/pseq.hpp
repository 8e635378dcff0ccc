// The Chebyshev-like sequence p_0 = 0, p_1 = 1, p_{i+1} = x p_i - p_{i-1}.
#pragma once

#include <cstddef>

#include "tl/poly.hpp"
#include "tl/report.hpp"

namespace tl {

// Process-wide cache of the p_i. Grows on demand, never truncated; reads may
// come from any thread, growth is serialized internally.
class PSequence {
 public:
  static PSequence& instance();
  IntPoly p(std::size_t i);

 private:
  PSequence();
  struct Impl;
  Impl* impl_;
};

// p_i per the recurrence; deg(p_i) = i-1 for i >= 1.
IntPoly p(std::size_t i);

// Symbolic verification of the product/sum identities satisfied by the p_i
// for all admissible indices up to i_max:
//   p_{2i}   = p_{i-k+1} p_{i+k}   - p_{i-k} p_{i+k-1}   (k = 1..i)
//   p_{2i+1} = p_{i-k+1} p_{i+k+1} - p_{i-k} p_{i+k}     (k = 0..i)
//   p_{2j} + p_{2j+2} + ... + p_{2i}   = p_{i-k+1} p_{i+k}   - p_{j-k} p_{j+k-1}
//   p_{2j+1} + p_{2j+3} + ... + p_{2i+1} = p_{i-k+1} p_{i+k+1} - p_{j-k} p_{j+k}
CheckReport check_p_identities(std::size_t i_max);

}  // namespace tl
