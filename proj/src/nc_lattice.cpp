#include "typeb/nc_lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "typeb/errors.hpp"

namespace typeb {

namespace {

void check_size(int n, int cap, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": ground size must be positive");
  if (n > cap)
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
}

struct NcEnumerator {
  int n;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_min;
  std::vector<std::vector<int>>* out_blocks;
  std::vector<SetPartition>* out;

  // Element i may join a block with maximum m iff every element strictly
  // between m and i lies in a block contained in that gap; this keeps the
  // partial partition non-crossing and cannot exclude any completion.
  bool may_join(int b, int i) const {
    int m = blocks[static_cast<size_t>(b)].back();
    for (int k = m + 1; k < i; ++k)
      if (block_min[static_cast<size_t>(k)] <= m) return false;
    return true;
  }

  void recurse(int i) {
    if (i > n) {
      out->push_back(SetPartition(n, blocks));
      return;
    }
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
      if (!may_join(b, i)) continue;
      blocks[static_cast<size_t>(b)].push_back(i);
      block_min[static_cast<size_t>(i)] = blocks[static_cast<size_t>(b)].front();
      recurse(i + 1);
      blocks[static_cast<size_t>(b)].pop_back();
    }
    blocks.push_back({i});
    block_min[static_cast<size_t>(i)] = i;
    recurse(i + 1);
    blocks.pop_back();
  }
};

// p on odd positions 2e-1, q (blocks of labels 1..n) on even positions 2i
SetPartition interleave(const SetPartition& p, const std::vector<std::vector<int>>& q_blocks) {
  std::vector<std::vector<int>> combined;
  combined.reserve(p.blocks().size() + q_blocks.size());
  for (const auto& b : p.blocks()) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int e : b) nb.push_back(2 * e - 1);
    combined.push_back(std::move(nb));
  }
  for (const auto& b : q_blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int e : b) nb.push_back(2 * e);
    combined.push_back(std::move(nb));
  }
  return SetPartition(2 * p.ground_size(), std::move(combined));
}

std::mutex memo_mutex;
std::unordered_map<std::string, long long> mu_memo;

long long mu_top_impl(const SetPartition& p) {
  if (p.block_count() == 1) return 1;
  const std::string key = p.to_string();
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = mu_memo.find(key); it != mu_memo.end()) return it->second;
  }
  // mu(p, 1) = -sum over r in [p, 1) of mu(p, r), and mu(p, r) factors over
  // the blocks of r as a product of full-interval values of restrictions.
  long long acc = 0;
  for (const auto& r : nc_table(p.ground_size()).partitions()) {
    if (r.block_count() == 1) continue;
    if (!refines(p, r)) continue;
    long long term = 1;
    for (const auto& w : r.blocks()) term *= mu_top_impl(restrict_to(p, w));
    acc += term;
  }
  const long long value = -acc;
  std::lock_guard<std::mutex> lock(memo_mutex);
  mu_memo.emplace(key, value);
  return value;
}

}  // namespace

std::vector<SetPartition> enumerate_nc(int n, int cap) {
  check_size(n, cap, "enumerate_nc");
  std::vector<SetPartition> out;
  NcEnumerator en;
  en.n = n;
  en.block_min.assign(static_cast<size_t>(n) + 1, 0);
  en.out = &out;
  en.recurse(1);
  return out;
}

std::vector<TypeBPartition> enumerate_ncb(int n, int cap) {
  check_size(n, cap, "enumerate_ncb");
  std::vector<TypeBPartition> out;
  for (const auto& p : enumerate_nc(2 * n, 2 * kNcCap)) {
    // positions k <= n carry k, positions k > n carry -(k - n); negation is
    // the half-turn k <-> k + n of the 2n-cycle
    bool symmetric = true;
    const auto& owner = p.block_of();
    for (const auto& block : p.blocks()) {
      int image = -1;
      bool same = true;
      for (int k : block) {
        int neg = k > n ? k - n : k + n;
        int ob = owner[static_cast<size_t>(neg)];
        if (image == -1)
          image = ob;
        else if (ob != image)
          same = false;
      }
      if (!same || p.blocks()[static_cast<size_t>(image)].size() != block.size()) {
        symmetric = false;
        break;
      }
    }
    if (!symmetric) continue;
    std::vector<std::vector<int>> labelled;
    labelled.reserve(p.blocks().size());
    for (const auto& block : p.blocks()) {
      std::vector<int> nb;
      nb.reserve(block.size());
      for (int k : block) nb.push_back(k <= n ? k : -(k - n));
      labelled.push_back(std::move(nb));
    }
    out.push_back(TypeBPartition(n, std::move(labelled)));
  }
  return out;
}

SetPartition kreweras(const SetPartition& p) {
  if (!is_noncrossing(p)) throw DomainError("kreweras: " + p.to_string() + " crosses");
  const int n = p.ground_size();
  std::vector<std::vector<int>> q;
  q.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) q.push_back({i});
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < q.size() && !changed; ++i) {
      for (size_t j = i + 1; j < q.size() && !changed; ++j) {
        std::vector<std::vector<int>> candidate;
        candidate.reserve(q.size() - 1);
        for (size_t k = 0; k < q.size(); ++k)
          if (k != i && k != j) candidate.push_back(q[k]);
        std::vector<int> merged = q[i];
        merged.insert(merged.end(), q[j].begin(), q[j].end());
        candidate.push_back(std::move(merged));
        if (is_noncrossing(interleave(p, candidate))) {
          q = std::move(candidate);
          changed = true;
        }
      }
    }
  }
  return SetPartition(n, std::move(q));
}

long long moebius_to_top(const SetPartition& p) {
  if (p.ground_size() > kNcCap)
    throw SizeLimitError("moebius: n = " + std::to_string(p.ground_size()) + " exceeds cap " +
                         std::to_string(kNcCap));
  if (!is_noncrossing(p)) throw DomainError("moebius: " + p.to_string() + " crosses");
  return mu_top_impl(p);
}

long long moebius(const PartitionInterval& interval) {
  if (interval.upper.ground_size() > kNcCap)
    throw SizeLimitError("moebius: n = " + std::to_string(interval.upper.ground_size()) +
                         " exceeds cap " + std::to_string(kNcCap));
  if (!is_noncrossing(interval.lower))
    throw DomainError("moebius: " + interval.lower.to_string() + " crosses");
  if (!is_noncrossing(interval.upper))
    throw DomainError("moebius: " + interval.upper.to_string() + " crosses");
  long long value = 1;
  for (const auto& w : interval.upper.blocks())
    value *= mu_top_impl(restrict_to(interval.lower, w));
  return value;
}

NcTable::NcTable(int n) : n_(n), parts_(enumerate_nc(n)) {}

const std::vector<int>& NcTable::kreweras_index() const {
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  if (kr_.empty()) {
    kr_.reserve(parts_.size());
    for (const auto& p : parts_) kr_.push_back(index_of(kreweras(p)));
  }
  return kr_;
}

const std::vector<long long>& NcTable::moebius_to_top() const {
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  if (mu_.empty()) {
    mu_.reserve(parts_.size());
    for (const auto& p : parts_) mu_.push_back(mu_top_impl(p));
  }
  return mu_;
}

int NcTable::index_of(const SetPartition& p) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), p);
  if (it == parts_.end() || *it != p)
    throw DomainError("not a non-crossing partition of " + std::to_string(n_) + ": " +
                      p.to_string());
  return static_cast<int>(it - parts_.begin());
}

const NcTable& nc_table(int n, int cap) {
  check_size(n, cap, "nc_table");
  static std::mutex m;
  static std::map<int, std::unique_ptr<NcTable>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<NcTable>(n);
  return *slot;
}

}  // namespace typeb
