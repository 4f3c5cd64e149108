#include "qsym/quasi_kostka.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "qsym/errors.hpp"

namespace qsym {

PartitionMatrix::PartitionMatrix(std::vector<Partition> index)
    : index_(std::move(index)), data_(index_.size() * index_.size()) {}

std::optional<std::size_t> PartitionMatrix::position(const Partition& p) const {
  // The index is strictly decreasing in lex order.
  auto it = std::lower_bound(index_.begin(), index_.end(), p, std::greater<>());
  if (it == index_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - index_.begin());
}

BigInt PartitionMatrix::at(const Partition& row, const Partition& col) const {
  auto i = position(row);
  auto j = position(col);
  if (!i || !j) return 0;
  return (*this)(*i, *j);
}

bool PartitionMatrix::is_unit_upper_triangular() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool PartitionMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

BigInt PartitionMatrix::max_abs_entry() const {
  BigInt best = 0;
  for (const auto& v : data_) best = std::max(best, BigInt(abs(v)));
  return best;
}

PartitionMatrix PartitionMatrix::restrict_length(int m) const {
  std::vector<std::size_t> keep;
  std::vector<Partition> labels;
  for (std::size_t i = 0; i < dim(); ++i)
    if (index_[i].length() <= m) {
      keep.push_back(i);
      labels.push_back(index_[i]);
    }
  PartitionMatrix out(std::move(labels));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) out(a, b) = (*this)(keep[a], keep[b]);
  return out;
}

PartitionMatrix PartitionMatrix::operator*(const PartitionMatrix& other) const {
  if (index_ != other.index_) throw ValidationError("matrix index mismatch");
  PartitionMatrix out(index_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < dim(); ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

PartitionMatrix quasi_kostka_matrix(int n, std::optional<int> max_len) {
  if (n < 0) throw ValidationError("degree must be nonnegative");
  PartitionMatrix q(partitions_of(n, max_len));
  const auto& idx = q.index();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    q(i, i) = 1;
    // Entries vanish unless the column is dominated by the row.
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (dominance_leq(idx[j], idx[i])) q(i, j) = quasi_kostka(idx[i], Composition(idx[j]));
  }
  return q;
}

PartitionMatrix invert_unitriangular(const PartitionMatrix& q) {
  if (!q.is_unit_upper_triangular()) throw ValidationError("matrix is not unit upper-triangular");
  const std::size_t d = q.dim();
  PartitionMatrix x(q.index());
  for (std::size_t j = 0; j < d; ++j) {
    x(j, j) = 1;
    for (std::size_t i = j; i-- > 0;) {
      BigInt acc = 0;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (q(i, k) != 0 && x(k, j) != 0) acc += q(i, k) * x(k, j);
      x(i, j) = -acc;
    }
  }
  return x;
}

std::shared_ptr<const PartitionMatrix> inverse_quasi_kostka(int n, std::optional<int> max_len) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const PartitionMatrix>> cache;
  const std::pair<int, int> key{n, max_len.value_or(-1)};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto inv = std::make_shared<const PartitionMatrix>(invert_unitriangular(quasi_kostka_matrix(n, max_len)));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(inv)).first->second;
}

namespace {

class ChainBuilder {
 public:
  explicit ChainBuilder(std::optional<Partition> target) : target_(std::move(target)) {}

  std::vector<SignedChain> run(const Partition& mu) {
    if (target_ && target_->size() != mu.size()) throw ValidationError("partitions of different sizes");
    extend(mu);
    return std::move(out_);
  }

 private:
  // Quasi-Yamanouchi tableaux of the shape whose weight is a partition.
  const std::vector<Tableau>& steps(const Partition& shape) {
    auto it = memo_.find(shape);
    if (it != memo_.end()) return it->second;
    std::vector<Tableau> keep;
    for (auto& t : enumerate_qyt(shape))
      if (weight_composition(t).is_partition()) keep.push_back(std::move(t));
    return memo_.emplace(shape, std::move(keep)).first->second;
  }

  void extend(const Partition& shape) {
    for (const auto& t : steps(shape)) {
      const Partition wt = weight_composition(t).to_partition();
      if (target_ && !dominance_leq(*target_, wt)) continue;
      current_.push_back(t);
      if (wt == shape) {
        if (!target_ || *target_ == wt) out_.push_back(SignedChain{current_});
      } else {
        extend(wt);
      }
      current_.pop_back();
    }
  }

  std::optional<Partition> target_;
  std::map<Partition, std::vector<Tableau>> memo_;
  std::vector<Tableau> current_;
  std::vector<SignedChain> out_;
};

}  // namespace

std::vector<SignedChain> enumerate_chains(const Partition& mu, const Partition& lam) {
  return ChainBuilder(lam).run(mu);
}

std::vector<SignedChain> enumerate_chains_from(const Partition& mu) {
  return ChainBuilder(std::nullopt).run(mu);
}

}  // namespace qsym
