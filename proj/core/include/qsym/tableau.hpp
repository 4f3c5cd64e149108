#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qsym/partition.hpp"

namespace qsym {

/// Semistandard filling of a partition shape in French notation: rows()[0]
/// is the bottom row. Rows weakly increase left to right and columns
/// strictly increase bottom to top.
class Tableau {
 public:
  Tableau() = default;
  /// Throws ValidationError unless the rows form a semistandard filling of a
  /// partition shape with positive entries.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Partition shape() const;
  int size() const noexcept;
  int entry(int row, int col) const { return rows_.at(row).at(col); }
  int max_entry() const noexcept;

  /// wt_i = number of cells containing i, for i = 1..max_entry (so internal
  /// zeros are kept).
  std::vector<int> weight() const;

  /// True iff the entries are exactly 1..size().
  bool is_standard() const;

  /// Rows bottom to top, each left to right.
  std::vector<int> reading_word() const;
  /// Rows top to bottom, each left to right.
  std::vector<int> row_reading_word_top_down() const;

  /// Row index (0 = bottom) of each entry of a standard tableau, indexed by
  /// entry - 1.
  std::vector<int> rows_of_entries() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
};

/// The tableau with i's in row i.
Tableau superstandard(const Partition& shape);

/// All SSYT of the shape with the given content, sorted by reading word.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Composition& weight);
/// All SSYT of the shape with entries in 1..max_entry, sorted by reading word.
std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int max_entry);
std::vector<Tableau> enumerate_syt(const Partition& shape);

std::uint64_t kostka_number(const Partition& shape, const Composition& weight);

/// Descents i (i+1 strictly higher) of a standard tableau.
std::vector<int> descent_set(const Tableau& t);
/// (d_1, d_2 - d_1, ..., n - d_k). Throws ValidationError for non-standard input.
Composition descent_composition(const Tableau& t);

/// Renumbers equal letters left to right (increasing column index).
Tableau standardize(const Tableau& t);
/// Collapses each run of letters between consecutive descents to one letter.
/// Throws ValidationError for non-standard input.
Tableau destandardize(const Tableau& t);

bool is_quasi_yamanouchi(const Tableau& t);

/// Weight of a tableau as a composition. Throws CrossCheckError if the
/// weight has an internal zero (never the case for quasi-Yamanouchi input).
Composition weight_composition(const Tableau& t);

/// Quasi-Yamanouchi tableaux of the shape, optionally with fixed weight and/or
/// bounded largest entry. Sorted by reading word.
std::vector<Tableau> enumerate_qyt(const Partition& shape,
                                   const std::optional<Composition>& weight = std::nullopt,
                                   std::optional<int> max_entry = std::nullopt);

/// Streaming variants: the visitor receives the rows (bottom row first) of
/// each tableau in generation order, without building Tableau objects.
using RowsVisitor = std::function<void(const std::vector<std::vector<int>>&)>;
void for_each_syt(const Partition& shape, const RowsVisitor& visit);
void for_each_qyt(const Partition& shape, std::optional<int> max_entry, const RowsVisitor& visit);

/// Number of quasi-Yamanouchi tableaux of the shape with weight alpha.
std::uint64_t quasi_kostka(const Partition& shape, const Composition& alpha);

}  // namespace qsym
