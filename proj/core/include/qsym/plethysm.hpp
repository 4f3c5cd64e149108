#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qsym/partition.hpp"
#include "qsym/symfunc.hpp"
#include "qsym/tableau.hpp"

namespace qsym {

inline constexpr int kDefaultSizeGuard = 16;

/// Standard tableau of tableaux: an outer shape whose cells hold inner
/// tableaux of one shape, all entries together being 1..|outer|*|inner|.
/// Inner tableaux are compared by their row reading word read top row
/// first; the outer filling increases along rows and strictly up columns.
struct TableauOfTableaux {
  Partition outer;
  Partition inner;
  /// cells[r][c] is the inner tableau in outer row r (0 = bottom), column c.
  std::vector<std::vector<Tableau>> cells;

  /// One row per outer cell, cells read top row first and left to right;
  /// each row is the row reading word of that cell's tableau, top row first.
  std::vector<std::vector<int>> matrix() const;

  /// Inverse of matrix(). Throws ValidationError if the rows do not form a
  /// standard tableau of tableaux.
  static TableauOfTableaux from_matrix(const Partition& outer, const Partition& inner,
                                       const std::vector<std::vector<int>>& a);

  bool is_valid() const;

  friend bool operator==(const TableauOfTableaux&, const TableauOfTableaux&) = default;
};

using MatrixVisitor = std::function<void(const std::vector<std::vector<int>>&)>;

/// Streams the matrix A of every element of SToT(lam, mu). Throws
/// SizeGuardError when |lam|*|mu| exceeds size_guard.
void for_each_stot_matrix(const Partition& lam, const Partition& mu, const MatrixVisitor& visit,
                          int size_guard = kDefaultSizeGuard);

std::vector<TableauOfTableaux> enumerate_stot(const Partition& lam, const Partition& mu,
                                              int size_guard = kDefaultSizeGuard);
std::uint64_t count_stot(const Partition& lam, const Partition& mu, int size_guard = kDefaultSizeGuard);

/// Column scan of A: column k is written in the row order given by sorting
/// column k+1 ascending; the last column is written top to bottom.
std::vector<int> dynamic_reading_word(const std::vector<std::vector<int>>& a);
std::vector<int> dynamic_reading_word(const TableauOfTableaux& t);

/// Composition of n from {i : i+1 occurs before i}. Throws ValidationError
/// unless word is a permutation of 1..n.
Composition inverse_descent_composition(std::span<const int> word);

/// Sum of F_{iDes(dynamic(T))} over SToT(lam, mu).
SymFunc plethysm_F(const Partition& lam, const Partition& mu, int size_guard = kDefaultSizeGuard);
/// Schur expansion of plethysm_F.
SymFunc plethysm_schur(const Partition& lam, const Partition& mu, int size_guard = kDefaultSizeGuard);

/// Lex-largest Schur index of s_lam[s_mu] (closed form).
Partition leading_term(const Partition& lam, const Partition& mu);

/// The kappa formula for the second lex-largest index, defined when the last
/// part of mu exceeds 1 and lam has more than two parts. Trailing zeros are
/// stripped. For inputs within size_guard the result is compared with the
/// full Schur expansion and CrossCheckError is thrown on any mismatch.
std::optional<Partition> second_leading_term(const Partition& lam, const Partition& mu,
                                             int size_guard = kDefaultSizeGuard);

/// The formula value alone, without the expansion check. Absent when the
/// precondition fails; the vector may fail to be a partition.
std::optional<std::vector<int>> second_leading_formula(const Partition& lam, const Partition& mu);

}  // namespace qsym
