#include "tl/diagram.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tl {

struct PlanarDiagram::Rep {
  std::uint16_t n;
  std::vector<std::uint16_t> pairing;
};

namespace {

struct RepLess {
  using is_transparent = void;
  using RepPtr = std::unique_ptr<PlanarDiagram::Rep>;
  bool operator()(const RepPtr& a, const RepPtr& b) const { return cmp(*a, *b); }
  bool cmp(const PlanarDiagram::Rep& a, const PlanarDiagram::Rep& b) const {
    if (a.n != b.n) return a.n < b.n;
    return a.pairing < b.pairing;
  }
  bool operator()(const RepPtr& a, const PlanarDiagram::Rep& b) const { return cmp(*a, b); }
  bool operator()(const PlanarDiagram::Rep& a, const RepPtr& b) const { return cmp(a, *b); }
};

// Process-lifetime intern table with insert-or-get under a lock.
class InternTable {
 public:
  static InternTable& instance() {
    static InternTable t;
    return t;
  }
  const PlanarDiagram::Rep* intern(PlanarDiagram::Rep&& rep) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = set_.find(rep);
    if (it != set_.end()) return it->get();
    auto owned = std::make_unique<PlanarDiagram::Rep>(std::move(rep));
    return set_.insert(std::move(owned)).first->get();
  }

 private:
  std::mutex mu_;
  std::set<std::unique_ptr<PlanarDiagram::Rep>, RepLess> set_;
};

void validate_pairing(int n, const std::vector<std::uint16_t>& pairing) {
  const std::size_t sz = 2 * static_cast<std::size_t>(n);
  if (n < 0 || pairing.size() != sz) throw std::invalid_argument("diagram: bad pairing size");
  for (std::size_t p = 0; p < sz; ++p) {
    const std::uint16_t q = pairing[p];
    if (q >= sz || q == p || pairing[q] != p)
      throw std::invalid_argument("diagram: not a perfect matching");
  }
  // balanced-bracket check along boundary order
  std::vector<std::uint16_t> stack;
  for (std::uint16_t p = 0; p < sz; ++p) {
    if (pairing[p] > p) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != pairing[p])
        throw std::invalid_argument("diagram: crossing strands");
      stack.pop_back();
    }
  }
}

}  // namespace

PlanarDiagram PlanarDiagram::from_pairing(int n, std::vector<std::uint16_t> pairing) {
  validate_pairing(n, pairing);
  Rep rep{static_cast<std::uint16_t>(n), std::move(pairing)};
  return PlanarDiagram(InternTable::instance().intern(std::move(rep)));
}

PlanarDiagram PlanarDiagram::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: n must be >= 1");
  std::vector<std::uint16_t> pr(2 * static_cast<std::size_t>(n));
  for (int j = 0; j < 2 * n; ++j) pr[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(2 * n - 1 - j);
  return from_pairing(n, std::move(pr));
}

PlanarDiagram PlanarDiagram::generator(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("generator index out of range");
  std::vector<std::uint16_t> pr(2 * static_cast<std::size_t>(n));
  for (int j = 0; j < 2 * n; ++j) pr[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(2 * n - 1 - j);
  const int b1 = i - 1, b2 = i;                    // bottom points i, i+1
  const int t1 = 2 * n - 1 - b1, t2 = 2 * n - 1 - b2;  // their top points
  pr[b1] = static_cast<std::uint16_t>(b2);
  pr[b2] = static_cast<std::uint16_t>(b1);
  pr[t1] = static_cast<std::uint16_t>(t2);
  pr[t2] = static_cast<std::uint16_t>(t1);
  return from_pairing(n, std::move(pr));
}

int PlanarDiagram::n() const { return rep_->n; }
int PlanarDiagram::partner(int p) const { return rep_->pairing[static_cast<std::size_t>(p)]; }
const std::vector<std::uint16_t>& PlanarDiagram::pairing() const { return rep_->pairing; }

int PlanarDiagram::bottom_arc_count() const {
  const int nn = n();
  int c = 0;
  for (int p = 0; p < nn; ++p)
    if (partner(p) < nn && partner(p) > p) ++c;
  return c;
}

bool PlanarDiagram::is_identity() const {
  const int nn = n();
  for (int p = 0; p < nn; ++p)
    if (partner(p) != 2 * nn - 1 - p) return false;
  return true;
}

bool PlanarDiagram::operator<(const PlanarDiagram& o) const {
  if (rep_ == o.rep_) return false;
  if (rep_->n != o.rep_->n) return rep_->n < o.rep_->n;
  return rep_->pairing < o.rep_->pairing;
}

std::size_t PlanarDiagram::hash() const { return std::hash<const void*>()(rep_); }

PlanarDiagram PlanarDiagram::embedded(int new_n) const {
  const int old_n = n();
  if (new_n < old_n) throw std::invalid_argument("embedded: target size too small");
  if (new_n == old_n) return *this;
  const int sz = 2 * new_n;
  std::vector<std::uint16_t> pr(static_cast<std::size_t>(sz));
  auto remap = [&](int p) {  // old index -> new index
    return p < old_n ? p : p + 2 * (new_n - old_n);
  };
  for (int p = 0; p < 2 * old_n; ++p)
    pr[static_cast<std::size_t>(remap(p))] = static_cast<std::uint16_t>(remap(partner(p)));
  for (int j = old_n; j < new_n; ++j) {
    pr[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(2 * new_n - 1 - j);
    pr[static_cast<std::size_t>(2 * new_n - 1 - j)] = static_cast<std::uint16_t>(j);
  }
  return from_pairing(new_n, std::move(pr));
}

std::string PlanarDiagram::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int p = 0; p < 2 * n(); ++p) {
    if (partner(p) < p) continue;
    if (!first) os << ", ";
    first = false;
    os << p << "-" << partner(p);
  }
  os << "}";
  return os.str();
}

std::pair<PlanarDiagram, int> compose(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
  const int n = a.n();
  const int sz = 2 * n;
  // Interface node j in [0,n) glues bottom point j of a to top point j of b
  // (b's index 2n-1-j).  Walk each strand from a result boundary point.
  std::vector<std::uint16_t> pr(static_cast<std::size_t>(sz));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);

  // Boundary points of the result: bottom j (b's bottom j), top q (a's top q).
  // Returns the result-boundary endpoint reached from the given start.
  auto trace = [&](bool start_in_a, int start) {
    bool in_a = start_in_a;
    int pos = start;  // index within the current layer's own encoding
    for (;;) {
      if (in_a) {
        const int q = a.partner(pos);
        if (q >= n) return q;  // a's top = result top
        seen[static_cast<std::size_t>(q)] = 1;
        in_a = false;
        pos = 2 * n - 1 - q;  // continue at b's top point above interface q
      } else {
        const int q = b.partner(pos);
        if (q < n) return q;  // b's bottom = result bottom
        const int iface = 2 * n - 1 - q;
        seen[static_cast<std::size_t>(iface)] = 1;
        in_a = true;
        pos = iface;
      }
    }
  };

  std::vector<char> assigned(static_cast<std::size_t>(sz), 0);
  for (int start = 0; start < sz; ++start) {
    if (assigned[static_cast<std::size_t>(start)]) continue;
    int end;
    if (start < n) {
      end = trace(false, start);  // start from b's bottom point
    } else {
      end = trace(true, start);  // start from a's top point
    }
    pr[static_cast<std::size_t>(start)] = static_cast<std::uint16_t>(end);
    pr[static_cast<std::size_t>(end)] = static_cast<std::uint16_t>(start);
    assigned[static_cast<std::size_t>(start)] = 1;
    assigned[static_cast<std::size_t>(end)] = 1;
  }

  // Interface nodes not on any boundary strand form the deleted loops.
  int loops = 0;
  for (int j = 0; j < n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    int pos = j;
    for (;;) {  // alternate a-arc, b-arc until back at j
      seen[static_cast<std::size_t>(pos)] = 1;
      const int q = a.partner(pos);        // a-bottom arc: q < n here
      seen[static_cast<std::size_t>(q)] = 1;
      const int r = b.partner(2 * n - 1 - q);  // b-top arc
      const int next = 2 * n - 1 - r;
      if (next == j) break;
      pos = next;
    }
  }
  return {PlanarDiagram::from_pairing(n, std::move(pr)), loops};
}

PlanarDiagram star(const PlanarDiagram& d) {
  const int sz = 2 * d.n();
  std::vector<std::uint16_t> pr(static_cast<std::size_t>(sz));
  for (int p = 0; p < sz; ++p)
    pr[static_cast<std::size_t>(sz - 1 - p)] = static_cast<std::uint16_t>(sz - 1 - d.partner(p));
  return PlanarDiagram::from_pairing(d.n(), std::move(pr));
}

namespace {

void gen_matchings(int sz, std::vector<std::uint16_t>& pr, std::vector<char>& used, int from,
                   std::vector<PlanarDiagram>& out, int n) {
  int i = from;
  while (i < sz && used[static_cast<std::size_t>(i)]) ++i;
  if (i == sz) {
    out.push_back(PlanarDiagram::from_pairing(n, pr));
    return;
  }
  used[static_cast<std::size_t>(i)] = 1;
  // Every used position above i carries an arc over i, so partners stop at
  // the first used position; an odd gap keeps the interior matchable.
  for (int j = i + 1; j < sz && !used[static_cast<std::size_t>(j)]; ++j) {
    if ((j - i) % 2 == 0) continue;
    pr[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(j);
    pr[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(i);
    used[static_cast<std::size_t>(j)] = 1;
    gen_matchings(sz, pr, used, i + 1, out, n);
    used[static_cast<std::size_t>(j)] = 0;
  }
  used[static_cast<std::size_t>(i)] = 0;
}

}  // namespace

std::vector<PlanarDiagram> enumerate_diagrams(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_diagrams: n must be >= 1");
  std::vector<PlanarDiagram> out;
  std::vector<std::uint16_t> pr(2 * static_cast<std::size_t>(n));
  std::vector<char> used(2 * static_cast<std::size_t>(n), 0);
  gen_matchings(2 * n, pr, used, 0, out, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
  return c[static_cast<std::size_t>(n)];
}

std::pair<PlanarDiagram, int> compose_word(int n, const std::vector<int>& word) {
  PlanarDiagram d = PlanarDiagram::identity(n);
  int loops = 0;
  for (int i : word) {
    auto [next, c] = compose(d, PlanarDiagram::generator(n, i));
    d = next;
    loops += c;
  }
  return {d, loops};
}

}  // namespace tl
