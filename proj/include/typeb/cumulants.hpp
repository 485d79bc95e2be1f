#pragma once

#include <functional>
#include <vector>

#include "typeb/dual_scalar.hpp"
#include "typeb/series.hpp"

namespace typeb {

// Values M_1, ..., M_order of a moment sequence (1-based accessor).
struct MomentSequence {
  explicit MomentSequence(int order);
  MomentSequence(int order, std::vector<DualScalar> values);

  int order() const { return static_cast<int>(v_.size()); }
  const DualScalar& value(int k) const;
  void set_value(int k, DualScalar x);
  const std::vector<DualScalar>& values() const { return v_; }

  friend bool operator==(const MomentSequence& a, const MomentSequence& b) { return a.v_ == b.v_; }
  friend bool operator!=(const MomentSequence& a, const MomentSequence& b) { return !(a == b); }

 private:
  std::vector<DualScalar> v_;
};

struct CumulantSequence {
  explicit CumulantSequence(int order);
  CumulantSequence(int order, std::vector<DualScalar> values);

  int order() const { return static_cast<int>(v_.size()); }
  const DualScalar& value(int k) const;
  void set_value(int k, DualScalar x);
  const std::vector<DualScalar>& values() const { return v_; }

  friend bool operator==(const CumulantSequence& a, const CumulantSequence& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const CumulantSequence& a, const CumulantSequence& b) {
    return !(a == b);
  }

 private:
  std::vector<DualScalar> v_;
};

CSeries to_series(const MomentSequence& m);
CSeries to_series(const CumulantSequence& k);
MomentSequence moments_from_series(const CSeries& f);
CumulantSequence cumulants_from_series(const CSeries& f);

// M_n = sum over p in NC(n) of prod over blocks V of kappa_{|V|}
MomentSequence cumulants_to_moments(const CumulantSequence& k);

// kappa_n = sum over p in NC(n) of mu(p, 1_n) * prod over blocks V of M_{|V|}
CumulantSequence moments_to_cumulants(const MomentSequence& m);

// Letter of a word in a family of non-commutative variables.
struct Letter {
  int family = 0;
  int element = 0;
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.family == b.family && a.element == b.element;
  }
};

using Word = std::vector<Letter>;

// Pure function giving the joint moment of an ordered word; the empty word
// must evaluate to the unit.
using MixedMomentOracle = std::function<DualScalar(const Word&)>;

// kappa(word) = sum over p in NC(|word|) of mu(p, 1) * prod over blocks of
// the oracle on the subword
DualScalar multilinear_cumulant(const MixedMomentOracle& oracle, const Word& word);

// True iff the multilinear cumulant of a genuinely mixed word vanishes.
// Throws DomainError when the word involves fewer than two families.
bool freeness_test(const MixedMomentOracle& oracle, const Word& word);

// Joint-moment oracle of the free product of single-variable families with
// the given cumulant sequences: only partitions whose blocks stay inside one
// family contribute.
MixedMomentOracle free_product_oracle(std::vector<CumulantSequence> families);

// Single-family oracle that depends only on word length.
MixedMomentOracle moment_oracle(MomentSequence moments);

}  // namespace typeb
