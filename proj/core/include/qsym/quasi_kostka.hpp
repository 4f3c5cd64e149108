#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "qsym/bigint.hpp"
#include "qsym/partition.hpp"
#include "qsym/tableau.hpp"

namespace qsym {

/// Dense square matrix whose rows and columns share one partition index.
class PartitionMatrix {
 public:
  PartitionMatrix() = default;
  explicit PartitionMatrix(std::vector<Partition> index);

  const std::vector<Partition>& index() const noexcept { return index_; }
  std::size_t dim() const noexcept { return index_.size(); }

  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * dim() + j]; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * dim() + j]; }

  std::optional<std::size_t> position(const Partition& p) const;
  /// Entry by labels; zero if either label is not in the index.
  BigInt at(const Partition& row, const Partition& col) const;

  bool is_unit_upper_triangular() const;
  bool is_identity() const;
  BigInt max_abs_entry() const;

  /// Rows and columns whose label has at most m parts.
  PartitionMatrix restrict_length(int m) const;

  /// Product of two matrices over the same index.
  PartitionMatrix operator*(const PartitionMatrix& other) const;
  friend bool operator==(const PartitionMatrix&, const PartitionMatrix&) = default;

 private:
  std::vector<Partition> index_;
  std::vector<BigInt> data_;
};

/// (QK_{lam,mu}) over partitions of n with at most max_len parts, in
/// reverse lexicographic order. Unit upper-triangular.
PartitionMatrix quasi_kostka_matrix(int n, std::optional<int> max_len = std::nullopt);

/// Exact inverse of a unit upper-triangular matrix by back-substitution.
/// Throws ValidationError otherwise.
PartitionMatrix invert_unitriangular(const PartitionMatrix& q);

/// Inverse quasi-Kostka matrix, memoized per (n, max_len). Thread-safe.
std::shared_ptr<const PartitionMatrix> inverse_quasi_kostka(int n, std::optional<int> max_len = std::nullopt);

/// Sequence of quasi-Yamanouchi tableaux in which each shape is the weight of
/// the previous tableau, ending with a tableau whose weight is its shape.
struct SignedChain {
  std::vector<Tableau> tableaux;

  int length() const noexcept { return static_cast<int>(tableaux.size()); }
  int sign() const noexcept { return length() % 2 == 1 ? 1 : -1; }
  Partition start() const { return tableaux.front().shape(); }
  Partition weight() const { return tableaux.back().shape(); }
};

/// All chains from shape mu ending at weight lam; the signs sum to the
/// (mu, lam) entry of the inverse quasi-Kostka matrix.
std::vector<SignedChain> enumerate_chains(const Partition& mu, const Partition& lam);
/// All chains starting at shape mu, any final weight.
std::vector<SignedChain> enumerate_chains_from(const Partition& mu);

}  // namespace qsym
