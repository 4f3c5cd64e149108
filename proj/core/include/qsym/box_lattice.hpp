#pragma once

#include <cstdint>
#include <vector>

#include "qsym/partition.hpp"

namespace qsym {

/// A cover mu < nu in L(w,h) together with the column (1-based) of the
/// added cell, i.e. nu' - mu' = e_column in conjugate coordinates.
struct Cover {
  Partition upper;
  int column = 0;
};

/// Young's lattice restricted to the w x h box: partitions with largest
/// part at most w and at most h parts, ordered by containment and graded
/// by size.
class BoxLattice {
 public:
  BoxLattice(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int max_rank() const noexcept { return width_ * height_; }

  bool contains(const Partition& mu) const noexcept;

  /// Element groups indexed by rank 0..w*h; each group is in reverse-lex order.
  std::vector<std::vector<Partition>> elements_by_rank() const;
  std::vector<Partition> elements() const;
  std::uint64_t cardinality() const;

  /// (w - mu_h, ..., w - mu_1) with zeros stripped.
  Partition complement(const Partition& mu) const;

  /// Upper covers of mu in this box, ordered by decreasing column.
  std::vector<Cover> covers(const Partition& mu) const;

 private:
  void require(const Partition& mu) const;

  int width_;
  int height_;
};

/// Column of the single cell in upper / lower, or 0 if upper does not cover
/// lower in Young's lattice.
int added_column(const Partition& lower, const Partition& upper);

}  // namespace qsym
