#include "typeb/partition.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>

#include "typeb/errors.hpp"

namespace typeb {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::vector<int>> parse_blocks(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  size_t start = 0;
  while (start <= text.size()) {
    size_t bar = text.find('|', start);
    std::string_view chunk =
        text.substr(start, bar == std::string_view::npos ? text.size() - start : bar - start);
    std::vector<int> block;
    size_t cstart = 0;
    while (cstart <= chunk.size()) {
      size_t comma = chunk.find(',', cstart);
      std::string_view item = chunk.substr(
          cstart, comma == std::string_view::npos ? chunk.size() - cstart : comma - cstart);
      if (item.empty()) throw ParseError("empty element in '" + std::string(text) + "'");
      block.push_back(parse_int(item));
      if (comma == std::string_view::npos) break;
      cstart = comma + 1;
    }
    if (block.empty()) throw ParseError("empty block in '" + std::string(text) + "'");
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return blocks;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 1) throw DomainError("ground size must be positive");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  size_t total = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw DomainError("empty block");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e < 1 || e > n) throw DomainError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<size_t>(e)]) throw DomainError("element " + std::to_string(e) + " repeated");
      seen[static_cast<size_t>(e)] = true;
    }
    total += b.size();
  }
  if (total != static_cast<size_t>(n)) throw DomainError("blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
  block_of_.assign(static_cast<size_t>(n) + 1, -1);
  for (int i = 0; i < block_count(); ++i)
    for (int e : blocks_[static_cast<size_t>(i)]) block_of_[static_cast<size_t>(e)] = i;
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_block(int n) {
  std::vector<int> all;
  all.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return SetPartition(n, {std::move(all)});
}

SetPartition SetPartition::parse(std::string_view text) {
  auto blocks = parse_blocks(text);
  int n = 0;
  for (const auto& b : blocks)
    for (int e : b) n = std::max(n, e);
  return SetPartition(n, std::move(blocks));
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(static_cast<int>(b.size()));
  return out;
}

std::string SetPartition::to_string() const {
  std::string out;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

bool operator<(const SetPartition& a, const SetPartition& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  // block_of_ read along 1..n is the restricted growth string
  return a.block_of_ < b.block_of_;
}

std::ostream& operator<<(std::ostream& os, const SetPartition& p) { return os << p.to_string(); }

bool is_noncrossing(const SetPartition& p) {
  // Non-crossing iff for every block and every gap (a, c) between two of its
  // consecutive elements, each element of the gap has its whole block inside
  // the gap.
  const int n = p.ground_size();
  std::vector<int> bmin(static_cast<size_t>(p.block_count())), bmax(bmin);
  for (int i = 0; i < p.block_count(); ++i) {
    bmin[static_cast<size_t>(i)] = p.blocks()[static_cast<size_t>(i)].front();
    bmax[static_cast<size_t>(i)] = p.blocks()[static_cast<size_t>(i)].back();
  }
  const auto& owner = p.block_of();
  for (const auto& block : p.blocks()) {
    for (size_t j = 0; j + 1 < block.size(); ++j) {
      for (int k = block[j] + 1; k < block[j + 1] && k <= n; ++k) {
        int ob = owner[static_cast<size_t>(k)];
        if (bmin[static_cast<size_t>(ob)] <= block[j] || bmax[static_cast<size_t>(ob)] >= block[j + 1])
          return false;
      }
    }
  }
  return true;
}

bool refines(const SetPartition& p, const SetPartition& q) {
  if (p.ground_size() != q.ground_size())
    throw DimensionError("refines: ground sizes " + std::to_string(p.ground_size()) + " vs " +
                         std::to_string(q.ground_size()));
  const auto& qb = q.block_of();
  for (const auto& block : p.blocks()) {
    int target = qb[static_cast<size_t>(block.front())];
    for (int e : block)
      if (qb[static_cast<size_t>(e)] != target) return false;
  }
  return true;
}

SetPartition restrict_to(const SetPartition& p, const std::vector<int>& subset) {
  std::vector<int> rank(static_cast<size_t>(p.ground_size()) + 1, 0);
  for (size_t i = 0; i < subset.size(); ++i) rank[static_cast<size_t>(subset[i])] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks()) {
    if (rank[static_cast<size_t>(b.front())] == 0) continue;
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int e : b) {
      if (rank[static_cast<size_t>(e)] == 0)
        throw DomainError("subset is not a union of blocks");
      nb.push_back(rank[static_cast<size_t>(e)]);
    }
    blocks.push_back(std::move(nb));
  }
  return SetPartition(static_cast<int>(subset.size()), std::move(blocks));
}

PartitionInterval::PartitionInterval(SetPartition lo, SetPartition hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (!refines(lower, upper))
    throw DomainError("not an interval: " + lower.to_string() + " does not refine " +
                      upper.to_string());
}

TypeBPartition::TypeBPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 1) throw DomainError("ground size must be positive");
  std::vector<bool> seen(static_cast<size_t>(2 * n) + 1, false);
  size_t total = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw DomainError("empty block");
    for (int e : b) {
      if (e == 0 || e > n || e < -n)
        throw DomainError("element " + std::to_string(e) + " outside +-1..+-" + std::to_string(n));
      size_t pos = static_cast<size_t>(cyclic_position(e, n));
      if (seen[pos]) throw DomainError("element " + std::to_string(e) + " repeated");
      seen[pos] = true;
    }
    std::sort(b.begin(), b.end(),
              [n](int a, int c) { return cyclic_position(a, n) < cyclic_position(c, n); });
    total += b.size();
  }
  if (total != static_cast<size_t>(2 * n)) throw DomainError("blocks do not cover +-1..+-" + std::to_string(n));
  std::sort(blocks.begin(), blocks.end(), [n](const auto& a, const auto& b) {
    return cyclic_position(a.front(), n) < cyclic_position(b.front(), n);
  });
  blocks_ = std::move(blocks);

  std::set<std::vector<int>> block_set(blocks_.begin(), blocks_.end());
  int fixed = 0;
  for (const auto& b : blocks_) {
    std::vector<int> neg;
    neg.reserve(b.size());
    for (int e : b) neg.push_back(-e);
    std::sort(neg.begin(), neg.end(),
              [n](int a, int c) { return cyclic_position(a, n) < cyclic_position(c, n); });
    if (!block_set.count(neg)) throw DomainError("not symmetric: -" + to_string());
    if (neg == b) ++fixed;
  }
  if (fixed > 1) throw DomainError("more than one symmetric block");

  // non-crossing in the cyclic order <=> non-crossing after cutting between -n and 1
  std::vector<std::vector<int>> linear;
  linear.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    std::vector<int> lb;
    lb.reserve(b.size());
    for (int e : b) lb.push_back(cyclic_position(e, n));
    linear.push_back(std::move(lb));
  }
  if (!is_noncrossing(SetPartition(2 * n, std::move(linear))))
    throw DomainError("crossing blocks: " + to_string());
}

TypeBPartition TypeBPartition::parse(std::string_view text) {
  auto blocks = parse_blocks(text);
  int n = 0;
  for (const auto& b : blocks)
    for (int e : b) n = std::max(n, std::abs(e));
  return TypeBPartition(n, std::move(blocks));
}

int TypeBPartition::zero_block_index() const {
  for (int i = 0; i < block_count(); ++i) {
    const auto& b = blocks_[static_cast<size_t>(i)];
    bool fixed = true;
    for (int e : b) {
      bool found = false;
      for (int f : b)
        if (f == -e) { found = true; break; }
      if (!found) { fixed = false; break; }
    }
    if (fixed) return i;
  }
  return -1;
}

std::string TypeBPartition::to_string() const {
  std::string out;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TypeBPartition& p) { return os << p.to_string(); }

}  // namespace typeb
