#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsym/box_lattice.hpp"
#include "qsym/partition.hpp"

namespace qsym {

class TwoRowPoly;

/// Chains in L(w,h), each listed from its minimum upwards.
struct ChainDecomposition {
  int w = 0;
  int h = 0;
  std::vector<std::vector<Partition>> chains;

  BoxLattice lattice() const { return BoxLattice(w, h); }
  /// Column of each added cell, recomputed from consecutive elements
  /// (0 marks a step that is not a cover).
  std::vector<std::vector<int>> edge_labels() const;
  /// Sorts chains by (rank of minimum, minimum in reverse-lex order).
  void canonicalize();
  std::vector<Partition> minima() const;
  std::vector<Partition> maxima() const;
};

enum class Direction { f, e };

/// Result of applying a lowering (f) or raising (e) operator: the new
/// partition and the column of the cell added or removed.
struct Step {
  Partition target;
  int column = 0;
};

/// Which case of the operator definition applies to a partition.
struct OperatorStep {
  int phase = 0;
  std::string case_id;
  Direction direction = Direction::f;
  int column = 0;  // 0: boundary (lowest weight for f, highest weight for e)
};

/// Adds a cell in column c (1 starts a new row) or removes one from column c.
Partition add_cell(const Partition& lam, int column);
Partition remove_cell(const Partition& lam, int column);

// Width 3. L'(3,h): partitions in L(3,h) with no (3,1,1,1) subpartition.
bool in_stratum_w3(const Partition& lam, int h);
OperatorStep classify_w3(const Partition& lam, int h, Direction d);
std::optional<Step> f3(const Partition& lam, int h);
std::optional<Step> e3(const Partition& lam, int h);

// Width 4. L''(4,h): no (4,1,1) and no (2,2) subpartition; L'(4,h): no (4,1,1).
bool in_stratum_w4(const Partition& lam, int h);
bool in_prime_stratum_w4(const Partition& lam, int h);
OperatorStep classify_w4(const Partition& lam, int h, Direction d);
std::optional<Step> f4(const Partition& lam, int h);
std::optional<Step> e4(const Partition& lam, int h);

ChainDecomposition scd_w2(int h);
ChainDecomposition scd_w3(int h);
ChainDecomposition scd_w4(int h);
/// Chains of L'(4,h) only.
ChainDecomposition scd_prime_w4(int h);
/// Dispatch on w in {2,3,4}; ValidationError otherwise.
ChainDecomposition build_scd(int w, int h);

/// Closed-form minimal and maximal element sets of the decompositions.
std::set<Partition> minima_closed_form(int w, int h);
/// Maxima obtained from each closed-form minimum.
std::set<Partition> maxima_from_minima(int w, int h);
/// Maxima described through their complements.
std::set<Partition> maxima_by_complement(int w, int h);

/// a^{(wh-k,k)} = number of chains whose minimum has rank k, also computed
/// from the closed-form minima; throws CrossCheckError if the counts differ.
TwoRowPoly scd_coefficients(int w, int h);

}  // namespace qsym
