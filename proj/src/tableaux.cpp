#include "tl/tableaux.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tl {

std::string Partition::str() const {
  std::ostringstream os;
  os << "(" << f << "," << m << ")";
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  for (int f = n / 2; f >= 0; --f) out.push_back(Partition{f, n - 2 * f});
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dominates: partitions of different n");
  return a.f >= b.f;
}

UpDownTableau::UpDownTableau(std::vector<int> fseq) : fseq_(std::move(fseq)) {
  if (fseq_.empty() || fseq_[0] != 0) throw std::invalid_argument("tableau: must start at (0,0)");
  for (std::size_t k = 1; k < fseq_.size(); ++k) {
    const int f = fseq_[k], pf = fseq_[k - 1];
    const int m = static_cast<int>(k) - 2 * f;
    const bool arc = (f == pf + 1);
    const bool defect = (f == pf);
    if (m < 0 || f < 0 || !(arc || defect))
      throw std::invalid_argument("tableau: invalid Bratteli step");
  }
}

Partition UpDownTableau::shape_at(int k) const {
  if (k < 0 || k > n()) throw std::out_of_range("shape_at: level out of range");
  const int f = fseq_[static_cast<std::size_t>(k)];
  return Partition{f, k - 2 * f};
}

bool UpDownTableau::arc_step(int k) const {
  if (k < 1 || k > n()) throw std::out_of_range("arc_step: level out of range");
  return fseq_[static_cast<std::size_t>(k)] == fseq_[static_cast<std::size_t>(k - 1)] + 1;
}

UpDownTableau UpDownTableau::restricted(int k) const {
  if (k < 0 || k > n()) throw std::out_of_range("restricted: level out of range");
  return UpDownTableau(std::vector<int>(fseq_.begin(), fseq_.begin() + k + 1));
}

std::string UpDownTableau::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < fseq_.size(); ++i) {
    if (i) os << " ";
    os << fseq_[i];
  }
  os << "]";
  return os.str();
}

bool dominates(const UpDownTableau& s, const UpDownTableau& t) {
  if (s.n() != t.n()) throw std::invalid_argument("dominates: tableaux of different n");
  for (std::size_t k = 0; k < s.fseq().size(); ++k)
    if (s.fseq()[k] < t.fseq()[k]) return false;
  return true;
}

namespace {

void gen_paths(int n, const Partition& lambda, std::vector<int>& fseq,
               std::vector<UpDownTableau>& out) {
  const int k = static_cast<int>(fseq.size()) - 1;
  if (k == n) {
    if (fseq.back() == lambda.f) out.emplace_back(fseq);
    return;
  }
  const int f = fseq.back();
  const int remaining = n - k;
  // prune: need lambda.f - f arc steps among the remaining ones
  const int need = lambda.f - f;
  if (need < 0 || need > remaining) return;
  if ((k + 1) - 2 * (f + 1) >= 0) {  // arc step keeps the defect count >= 0
    fseq.push_back(f + 1);
    gen_paths(n, lambda, fseq, out);
    fseq.pop_back();
  }
  fseq.push_back(f);
  gen_paths(n, lambda, fseq, out);
  fseq.pop_back();
}

struct TabCacheKey {
  int n;
  int f;
  auto operator<=>(const TabCacheKey&) const = default;
};

}  // namespace

const std::vector<UpDownTableau>& enumerate_tableaux(int n, const Partition& lambda) {
  if (lambda.n() != n || lambda.f < 0 || lambda.m < 0)
    throw std::invalid_argument("enumerate_tableaux: not a partition of n");
  static std::mutex mu;
  static std::map<TabCacheKey, std::unique_ptr<std::vector<UpDownTableau>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[TabCacheKey{n, lambda.f}];
  if (!slot) {
    auto vec = std::make_unique<std::vector<UpDownTableau>>();
    std::vector<int> fseq{0};
    gen_paths(n, lambda, fseq, *vec);
    // descending lex on fseq refines the dominance order; t^lambda is first
    std::sort(vec->begin(), vec->end(),
              [](const UpDownTableau& a, const UpDownTableau& b) { return b < a; });
    slot = std::move(vec);
  }
  return *slot;
}

std::uint64_t dim_of(int n, const Partition& lambda) {
  if (lambda.n() != n) throw std::invalid_argument("dim_of: not a partition of n");
  // paths[f] = number of paths to (f, k-2f) at level k
  std::vector<std::uint64_t> paths(static_cast<std::size_t>(n / 2) + 2, 0);
  paths[0] = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> next(paths.size(), 0);
    for (int f = 0; 2 * f <= k; ++f) {
      const int m = k - 2 * f;
      if (m < 0) continue;
      std::uint64_t v = 0;
      if (m >= 1) v += paths[static_cast<std::size_t>(f)];        // defect step from (f, m-1)
      if (f >= 1) v += paths[static_cast<std::size_t>(f - 1)];    // arc step from (f-1, m+1)
      next[static_cast<std::size_t>(f)] = v;
    }
    paths = std::move(next);
  }
  return paths[static_cast<std::size_t>(lambda.f)];
}

HalfDiagram half_diagram_of(const UpDownTableau& t) {
  HalfDiagram h;
  h.n = t.n();
  std::vector<int> open;
  for (int k = 1; k <= t.n(); ++k) {
    if (t.arc_step(k)) {
      if (open.empty()) throw std::logic_error("half_diagram_of: no open point");
      h.arcs.emplace_back(open.back(), k);
      open.pop_back();
    } else {
      open.push_back(k);
    }
  }
  h.defects = std::move(open);
  std::sort(h.arcs.begin(), h.arcs.end());
  return h;
}

UpDownTableau tableau_of_half_diagram(const HalfDiagram& h) {
  std::vector<int> closes(static_cast<std::size_t>(h.n) + 1, 0);
  for (const auto& [a, b] : h.arcs) {
    if (a < 1 || b <= a || b > h.n) throw std::invalid_argument("bad half diagram arc");
    closes[static_cast<std::size_t>(b)] = 1;
  }
  std::vector<int> fseq(static_cast<std::size_t>(h.n) + 1, 0);
  for (int k = 1; k <= h.n; ++k)
    fseq[static_cast<std::size_t>(k)] = fseq[static_cast<std::size_t>(k - 1)] + closes[static_cast<std::size_t>(k)];
  return UpDownTableau(std::move(fseq));
}

std::string HalfDiagram::str() const {
  std::ostringstream os;
  os << "arcs{";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) os << ",";
    os << arcs[i].first << "-" << arcs[i].second;
  }
  os << "} defects{";
  for (std::size_t i = 0; i < defects.size(); ++i) {
    if (i) os << ",";
    os << defects[i];
  }
  os << "}";
  return os.str();
}

}  // namespace tl
