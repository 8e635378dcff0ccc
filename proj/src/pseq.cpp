#include "tl/pseq.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace tl {

struct PSequence::Impl {
  std::mutex mu;
  std::vector<IntPoly> cache;
};

PSequence::PSequence() : impl_(new Impl) {
  impl_->cache.push_back(IntPoly());   // p_0 = 0
  impl_->cache.push_back(IntPoly(1));  // p_1 = 1
}

PSequence& PSequence::instance() {
  static PSequence seq;
  return seq;
}

IntPoly PSequence::p(std::size_t i) {
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto& c = impl_->cache;
  const IntPoly x = IntPoly::x();
  while (c.size() <= i) {
    const std::size_t k = c.size();
    c.push_back(x * c[k - 1] - c[k - 2]);
  }
  return c[i];
}

IntPoly p(std::size_t i) { return PSequence::instance().p(i); }

namespace {

std::string idx3(const char* id, std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << id << " fails at i=" << i << " j=" << j << " k=" << k;
  return os.str();
}

}  // namespace

CheckReport check_p_identities(std::size_t i_max) {
  CheckReport rep;
  rep.name = "p-identities";
  for (std::size_t i = 0; i <= i_max; ++i) {
    for (std::size_t k = 1; k <= i; ++k)
      rep.require(p(2 * i) == p(i - k + 1) * p(i + k) - p(i - k) * p(i + k - 1),
                  idx3("even product identity", i, i, k));
    for (std::size_t k = 0; k <= i; ++k)
      rep.require(p(2 * i + 1) == p(i - k + 1) * p(i + k + 1) - p(i - k) * p(i + k),
                  idx3("odd product identity", i, i, k));
  }
  for (std::size_t j = 0; j <= i_max; ++j) {
    IntPoly even_sum;
    IntPoly odd_sum;
    for (std::size_t i = j; i <= i_max; ++i) {
      even_sum += p(2 * i);
      odd_sum += p(2 * i + 1);
      for (std::size_t k = 1; k <= j; ++k)
        rep.require(even_sum == p(i - k + 1) * p(i + k) - p(j - k) * p(j + k - 1),
                    idx3("even sum identity", i, j, k));
      for (std::size_t k = 0; k <= j; ++k)
        rep.require(odd_sum == p(i - k + 1) * p(i + k + 1) - p(j - k) * p(j + k),
                    idx3("odd sum identity", i, j, k));
    }
  }
  return rep;
}

}  // namespace tl
