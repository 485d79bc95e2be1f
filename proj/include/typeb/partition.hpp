#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace typeb {

// Partition of {1, ..., n} held in canonical form: blocks sorted internally,
// blocks ordered by their least element.  Construction validates that the
// blocks are disjoint, nonempty and cover the ground set.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition singletons(int n);
  static SetPartition one_block(int n);
  // "1,3|2" -> {{1,3},{2}}; ground size is the max element
  static SetPartition parse(std::string_view text);

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  std::vector<int> block_sizes() const;
  // 1-based element -> index of its block in blocks()
  const std::vector<int>& block_of() const { return block_of_; }

  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
  // lexicographic on the restricted growth string; the enumeration order
  friend bool operator<(const SetPartition& a, const SetPartition& b);

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // size n_ + 1, slot 0 unused
};

std::ostream& operator<<(std::ostream& os, const SetPartition& p);

bool is_noncrossing(const SetPartition& p);

// p <= q in the refinement order (every p-block inside some q-block).
// Throws DimensionError when ground sizes differ.
bool refines(const SetPartition& p, const SetPartition& q);

// Restriction of p to a union of p-blocks, relabelled to {1, ..., |subset|}
// by increasing original label.  subset must be sorted and p-saturated.
SetPartition restrict_to(const SetPartition& p, const std::vector<int>& subset);

// Validated interval [lower, upper] in the refinement order.
struct PartitionInterval {
  SetPartition lower;
  SetPartition upper;
  PartitionInterval(SetPartition lo, SetPartition hi);
};

// Symmetric non-crossing partition of {1,...,n, -1,...,-n} under the cyclic
// order 1 < 2 < ... < n < -1 < -2 < ... < -n.  Invariants checked on
// construction: symmetry (-V is a block whenever V is), non-crossing, and at
// most one block fixed by negation.
class TypeBPartition {
 public:
  TypeBPartition(int n, std::vector<std::vector<int>> blocks);

  static TypeBPartition parse(std::string_view text);

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  // the block V with V = -V, or -1 if none
  int zero_block_index() const;

  std::string to_string() const;

  friend bool operator==(const TypeBPartition& a, const TypeBPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const TypeBPartition& a, const TypeBPartition& b) { return !(a == b); }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;  // canonical: cyclic positions sorted
};

std::ostream& operator<<(std::ostream& os, const TypeBPartition& p);

// Position of element k of {±1..±n} in the linear order 1 < ... < n < -1 < ... < -n.
inline int cyclic_position(int k, int n) { return k > 0 ? k : n - k; }

}  // namespace typeb
