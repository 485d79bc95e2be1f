#pragma once

#include <cstdint>
#include <vector>

#include "typeb/partition.hpp"

namespace typeb {

inline constexpr int kNcCap = 14;   // enumerate_nc and moebius ground-size cap
inline constexpr int kNcbCap = 7;   // enumerate_ncb cap (uses NC(2n) internally)

// All non-crossing partitions of {1..n} in canonical order: lexicographic by
// restricted growth string.  Count is catalan(n).
std::vector<SetPartition> enumerate_nc(int n, int cap = kNcCap);

// All symmetric non-crossing partitions of {±1..±n}; order inherited from the
// enumeration of NC(2n).  Count is binomial(2n, n).
std::vector<TypeBPartition> enumerate_ncb(int n, int cap = kNcbCap);

// Kreweras complement: the coarsest partition q of the interleaved copies
// 1', ..., n' such that p on {1..n} and q on {1'..n'} are jointly
// non-crossing in the order 1 < 1' < 2 < 2' < ... < n < n'.  Computed by
// greedy coarsening from the singleton partition; every maximal compatible
// coarsening is the complement, so greedy order does not matter.
// Throws DomainError when p crosses.
SetPartition kreweras(const SetPartition& p);

// Moebius function of the lattice of non-crossing partitions, evaluated by the
// defining interval recursion
//   mu(p, p) = 1,   sum over r in [p, q] of mu(p, r) = 0   (p < q)
// with memoization on the isomorphism class of [p, q] (a product of
// full intervals of restrictions).  Both endpoints must be non-crossing.
long long moebius(const PartitionInterval& interval);

// mu(p, 1_n) for non-crossing p.
long long moebius_to_top(const SetPartition& p);

// Number of blocks of the Kreweras complement; |p| + |kreweras(p)| = n + 1.
// (declared for symmetry with tests; trivially derived)
inline int kreweras_block_count(const SetPartition& p) {
  return p.ground_size() + 1 - p.block_count();
}

// Shared per-order tables used by the moment/cumulant and convolution
// transforms: the partition list plus, lazily, Kreweras indices and
// mu(., 1_n) values.  Cached per n for the life of the process.
class NcTable {
 public:
  explicit NcTable(int n);

  int n() const { return n_; }
  const std::vector<SetPartition>& partitions() const { return parts_; }
  // the one-block partition; first in RGS-lexicographic order
  const SetPartition& top() const { return parts_.front(); }
  // index into partitions() of the complement of partitions()[i]
  const std::vector<int>& kreweras_index() const;
  // mu(partitions()[i], 1_n)
  const std::vector<long long>& moebius_to_top() const;
  int index_of(const SetPartition& p) const;

 private:
  int n_;
  std::vector<SetPartition> parts_;
  mutable std::vector<int> kr_;
  mutable std::vector<long long> mu_;
};

const NcTable& nc_table(int n, int cap = kNcCap);

}  // namespace typeb
