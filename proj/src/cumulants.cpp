#include "typeb/cumulants.hpp"

#include <set>

#include "typeb/errors.hpp"
#include "typeb/nc_lattice.hpp"

namespace typeb {

namespace {

std::vector<DualScalar> checked(int order, std::vector<DualScalar> values, int min_order) {
  if (order < min_order) throw DomainError("sequence order must be at least " + std::to_string(min_order));
  if (values.size() != static_cast<size_t>(order))
    throw DimensionError("expected " + std::to_string(order) + " values, got " +
                         std::to_string(values.size()));
  return values;
}

Word subword(const Word& word, const std::vector<int>& block) {
  Word out;
  out.reserve(block.size());
  for (int e : block) out.push_back(word[static_cast<size_t>(e - 1)]);
  return out;
}

}  // namespace

MomentSequence::MomentSequence(int order) {
  if (order < 1) throw DomainError("sequence order must be at least 1");
  v_.assign(static_cast<size_t>(order), DualScalar());
}

MomentSequence::MomentSequence(int order, std::vector<DualScalar> values)
    : v_(checked(order, std::move(values), 1)) {}

const DualScalar& MomentSequence::value(int k) const {
  if (k < 1 || k > order()) throw TruncationError("moment " + std::to_string(k) + " of an order-" + std::to_string(order()) + " sequence");
  return v_[static_cast<size_t>(k - 1)];
}

void MomentSequence::set_value(int k, DualScalar x) {
  if (k < 1 || k > order()) throw TruncationError("moment " + std::to_string(k) + " of an order-" + std::to_string(order()) + " sequence");
  v_[static_cast<size_t>(k - 1)] = std::move(x);
}

CumulantSequence::CumulantSequence(int order) {
  if (order < 1) throw DomainError("sequence order must be at least 1");
  v_.assign(static_cast<size_t>(order), DualScalar());
}

CumulantSequence::CumulantSequence(int order, std::vector<DualScalar> values)
    : v_(checked(order, std::move(values), 1)) {}

const DualScalar& CumulantSequence::value(int k) const {
  if (k < 1 || k > order()) throw TruncationError("cumulant " + std::to_string(k) + " of an order-" + std::to_string(order()) + " sequence");
  return v_[static_cast<size_t>(k - 1)];
}

void CumulantSequence::set_value(int k, DualScalar x) {
  if (k < 1 || k > order()) throw TruncationError("cumulant " + std::to_string(k) + " of an order-" + std::to_string(order()) + " sequence");
  v_[static_cast<size_t>(k - 1)] = std::move(x);
}

CSeries to_series(const MomentSequence& m) { return CSeries(m.order(), m.values()); }
CSeries to_series(const CumulantSequence& k) { return CSeries(k.order(), k.values()); }

MomentSequence moments_from_series(const CSeries& f) {
  std::vector<DualScalar> v;
  v.reserve(static_cast<size_t>(f.order()));
  for (int k = 1; k <= f.order(); ++k) v.push_back(f.coeff(k));
  return MomentSequence(f.order(), std::move(v));
}

CumulantSequence cumulants_from_series(const CSeries& f) {
  std::vector<DualScalar> v;
  v.reserve(static_cast<size_t>(f.order()));
  for (int k = 1; k <= f.order(); ++k) v.push_back(f.coeff(k));
  return CumulantSequence(f.order(), std::move(v));
}

MomentSequence cumulants_to_moments(const CumulantSequence& k) {
  if (k.order() > kNcCap)
    throw SizeLimitError("cumulants_to_moments: order " + std::to_string(k.order()) +
                         " exceeds cap " + std::to_string(kNcCap));
  const CSeries f = to_series(k);
  MomentSequence out(k.order());
  for (int n = 1; n <= k.order(); ++n) {
    DualScalar acc;
    for (const auto& p : nc_table(n).partitions()) acc += cf_product(f, p);
    out.set_value(n, acc);
  }
  return out;
}

CumulantSequence moments_to_cumulants(const MomentSequence& m) {
  if (m.order() > kNcCap)
    throw SizeLimitError("moments_to_cumulants: order " + std::to_string(m.order()) +
                         " exceeds cap " + std::to_string(kNcCap));
  const CSeries f = to_series(m);
  CumulantSequence out(m.order());
  for (int n = 1; n <= m.order(); ++n) {
    const NcTable& tab = nc_table(n);
    const auto& mu = tab.moebius_to_top();
    DualScalar acc;
    for (size_t i = 0; i < tab.partitions().size(); ++i)
      acc += Rational(static_cast<long>(mu[i])) * cf_product(f, tab.partitions()[i]);
    out.set_value(n, acc);
  }
  return out;
}

DualScalar multilinear_cumulant(const MixedMomentOracle& oracle, const Word& word) {
  if (word.empty()) throw DomainError("multilinear_cumulant: empty word");
  const int n = static_cast<int>(word.size());
  if (n > kNcCap)
    throw SizeLimitError("multilinear_cumulant: word length " + std::to_string(n) +
                         " exceeds cap " + std::to_string(kNcCap));
  const NcTable& tab = nc_table(n);
  const auto& mu = tab.moebius_to_top();
  DualScalar acc;
  for (size_t i = 0; i < tab.partitions().size(); ++i) {
    DualScalar term = Rational(static_cast<long>(mu[i])) * DualScalar::one();
    for (const auto& block : tab.partitions()[i].blocks()) term *= oracle(subword(word, block));
    acc += term;
  }
  return acc;
}

bool freeness_test(const MixedMomentOracle& oracle, const Word& word) {
  std::set<int> families;
  for (const auto& l : word) families.insert(l.family);
  if (families.size() < 2)
    throw DomainError("freeness_test: word involves fewer than two families");
  return multilinear_cumulant(oracle, word).is_zero();
}

MixedMomentOracle free_product_oracle(std::vector<CumulantSequence> families) {
  if (families.empty()) throw DomainError("free_product_oracle: no families");
  return [families = std::move(families)](const Word& word) -> DualScalar {
    if (word.empty()) return DualScalar::one();
    const int n = static_cast<int>(word.size());
    if (n > kNcCap)
      throw SizeLimitError("free_product_oracle: word length " + std::to_string(n) +
                           " exceeds cap " + std::to_string(kNcCap));
    for (const auto& l : word)
      if (l.family < 0 || l.family >= static_cast<int>(families.size()))
        throw DomainError("free_product_oracle: unknown family " + std::to_string(l.family));
    DualScalar acc;
    for (const auto& p : nc_table(n).partitions()) {
      DualScalar term = DualScalar::one();
      bool homogeneous = true;
      for (const auto& block : p.blocks()) {
        const int fam = word[static_cast<size_t>(block.front() - 1)].family;
        for (int e : block)
          if (word[static_cast<size_t>(e - 1)].family != fam) {
            homogeneous = false;
            break;
          }
        if (!homogeneous) break;
        const auto& seq = families[static_cast<size_t>(fam)];
        if (static_cast<int>(block.size()) > seq.order())
          throw TruncationError("free_product_oracle: block of size " +
                                std::to_string(block.size()) + " exceeds family order " +
                                std::to_string(seq.order()));
        term *= seq.value(static_cast<int>(block.size()));
      }
      if (homogeneous) acc += term;
    }
    return acc;
  };
}

MixedMomentOracle moment_oracle(MomentSequence moments) {
  return [moments = std::move(moments)](const Word& word) -> DualScalar {
    if (word.empty()) return DualScalar::one();
    return moments.value(static_cast<int>(word.size()));
  };
}

}  // namespace typeb
