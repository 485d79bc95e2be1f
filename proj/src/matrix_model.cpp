#include "typeb/matrix_model.hpp"

#include <algorithm>

#include "typeb/errors.hpp"
#include "typeb/nc_lattice.hpp"

namespace typeb {

namespace {

void check_dims(int a, int b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": dimensions " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

RationalMatrix ordered_product(const std::vector<RationalMatrix>& ms,
                               const std::vector<int>& index) {
  RationalMatrix out = ms[static_cast<size_t>(index.front() - 1)];
  for (size_t i = 1; i < index.size(); ++i) out = out * ms[static_cast<size_t>(index[i] - 1)];
  return out;
}

}  // namespace

RationalMatrix::RationalMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw DomainError("matrix dimension must be positive");
  a_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), Rational(0));
}

RationalMatrix RationalMatrix::identity(int dim) {
  RationalMatrix out(dim);
  for (int i = 0; i < dim; ++i) out.at(i, i) = 1;
  return out;
}

Rational RationalMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  check_dims(a.dim_, b.dim_, "matrix add");
  RationalMatrix out(a.dim_);
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  check_dims(a.dim_, b.dim_, "matrix mul");
  RationalMatrix out(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& a) {
  RationalMatrix out(a.dim_);
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = c * a.a_[i];
  return out;
}

MatrixModel::MatrixModel(RationalMatrix weights_) : weights(std::move(weights_)) {}

Rational MatrixModel::phi(const RationalMatrix& a) const {
  check_dims(a.dim(), dim(), "phi");
  return a.trace() / Rational(dim());
}

Rational MatrixModel::f(const RationalMatrix& xi) const {
  check_dims(xi.dim(), dim(), "f");
  Rational out(0);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) out += weights.at(i, j) * xi.at(i, j);
  return out;
}

PairElement pair_mul(const PairElement& p, const PairElement& q) {
  return {p.a * q.a, p.a * q.xi + p.xi * q.a};
}

DualScalar expectation(const MatrixModel& model, const PairElement& p) {
  return {model.phi(p.a), model.f(p.xi)};
}

DualScalar conditional_expectation(const MatrixModel& model, const BimoduleElement& e) {
  return {model.phi(e.a), model.f(e.xi) + model.phi(e.b)};
}

BimoduleElement c_action(const DualScalar& c, const BimoduleElement& e) {
  return {c.x * e.a, c.x * e.xi, c.t * e.a + c.x * e.b};
}

Rational type_a_cumulant(const MatrixModel& model, const std::vector<RationalMatrix>& as) {
  if (as.empty()) throw DomainError("type_a_cumulant: empty argument list");
  for (const auto& a : as) check_dims(a.dim(), model.dim(), "type_a_cumulant");
  const int n = static_cast<int>(as.size());
  const NcTable& tab = nc_table(n);
  const auto& mu = tab.moebius_to_top();
  Rational acc(0);
  for (size_t i = 0; i < tab.partitions().size(); ++i) {
    Rational term(static_cast<long>(mu[i]));
    for (const auto& block : tab.partitions()[i].blocks())
      term *= model.phi(ordered_product(as, block));
    acc += term;
  }
  return acc;
}

Rational kprime(const MatrixModel& model, const std::vector<RationalMatrix>& others, int p,
                const RationalMatrix& xi) {
  const int n = static_cast<int>(others.size()) + 1;
  if (p < 1 || p > n) throw DomainError("kprime: position " + std::to_string(p) + " outside 1.." + std::to_string(n));
  check_dims(xi.dim(), model.dim(), "kprime");
  for (const auto& a : others) check_dims(a.dim(), model.dim(), "kprime");
  std::vector<RationalMatrix> args;
  args.reserve(static_cast<size_t>(n));
  args.insert(args.end(), others.begin(), others.begin() + (p - 1));
  args.push_back(xi);
  args.insert(args.end(), others.begin() + (p - 1), others.end());
  const NcTable& tab = nc_table(n);
  const auto& mu = tab.moebius_to_top();
  Rational acc(0);
  for (size_t i = 0; i < tab.partitions().size(); ++i) {
    Rational term(static_cast<long>(mu[i]));
    for (const auto& block : tab.partitions()[i].blocks()) {
      const RationalMatrix prod = ordered_product(args, block);
      const bool through_p =
          std::find(block.begin(), block.end(), p) != block.end();
      term *= through_p ? model.f(prod) : model.phi(prod);
    }
    acc += term;
  }
  return acc;
}

DualScalar type_b_cumulant(const MatrixModel& model, const std::vector<PairElement>& word) {
  if (word.empty()) throw DomainError("type_b_cumulant: empty word");
  for (const auto& p : word) {
    check_dims(p.a.dim(), model.dim(), "type_b_cumulant");
    check_dims(p.xi.dim(), model.dim(), "type_b_cumulant");
  }
  const int n = static_cast<int>(word.size());
  const NcTable& tab = nc_table(n);
  const auto& mu = tab.moebius_to_top();
  DualScalar acc;
  for (size_t i = 0; i < tab.partitions().size(); ++i) {
    DualScalar term = Rational(static_cast<long>(mu[i])) * DualScalar::one();
    for (const auto& block : tab.partitions()[i].blocks()) {
      PairElement prod = word[static_cast<size_t>(block.front() - 1)];
      for (size_t j = 1; j < block.size(); ++j)
        prod = pair_mul(prod, word[static_cast<size_t>(block[j] - 1)]);
      term *= expectation(model, prod);
    }
    acc += term;
  }
  return acc;
}

bool component_identity_check(const MatrixModel& model, const std::vector<PairElement>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<RationalMatrix> as;
  as.reserve(word.size());
  for (const auto& p : word) as.push_back(p.a);
  Rational second(0);
  for (int p = 1; p <= n; ++p) {
    std::vector<RationalMatrix> others;
    others.reserve(static_cast<size_t>(n) - 1);
    for (int q = 1; q <= n; ++q)
      if (q != p) others.push_back(word[static_cast<size_t>(q - 1)].a);
    second += kprime(model, others, p, word[static_cast<size_t>(p - 1)].xi);
  }
  const DualScalar expected(type_a_cumulant(model, as), second);
  return type_b_cumulant(model, word) == expected;
}

}  // namespace typeb
