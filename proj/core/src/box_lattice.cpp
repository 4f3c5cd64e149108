#include "qsym/box_lattice.hpp"

#include <string>

#include "qsym/errors.hpp"

namespace qsym {

BoxLattice::BoxLattice(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw ValidationError("box dimensions must be nonnegative");
}

bool BoxLattice::contains(const Partition& mu) const noexcept {
  return mu.length() <= height_ && mu[0] <= width_;
}

void BoxLattice::require(const Partition& mu) const {
  if (!contains(mu))
    throw ValidationError("partition outside L(" + std::to_string(width_) + "," +
                          std::to_string(height_) + ")");
}

std::vector<std::vector<Partition>> BoxLattice::elements_by_rank() const {
  std::vector<std::vector<Partition>> groups(static_cast<std::size_t>(max_rank()) + 1);
  for (int r = 0; r <= max_rank(); ++r) groups[r] = partitions_of(r, height_, width_);
  return groups;
}

std::vector<Partition> BoxLattice::elements() const {
  std::vector<Partition> out;
  for (auto& group : elements_by_rank())
    for (auto& p : group) out.push_back(std::move(p));
  return out;
}

std::uint64_t BoxLattice::cardinality() const {
  // binomial(w + h, h), exact in 64 bits for any box we can enumerate.
  std::uint64_t result = 1;
  for (int i = 1; i <= height_; ++i) result = result * static_cast<std::uint64_t>(width_ + i) / i;
  return result;
}

Partition BoxLattice::complement(const Partition& mu) const {
  require(mu);
  std::vector<int> parts(height_);
  for (int i = 0; i < height_; ++i) parts[i] = width_ - mu[height_ - 1 - i];
  return Partition(std::move(parts));
}

std::vector<Cover> BoxLattice::covers(const Partition& mu) const {
  require(mu);
  std::vector<Cover> out;
  // Adding a cell at the end of row i puts it in column mu_i + 1.
  for (int i = 0; i <= mu.length() && i < height_; ++i) {
    const int col = mu[i] + 1;
    if (col > width_) continue;
    if (i > 0 && mu[i - 1] < col) continue;
    std::vector<int> parts = mu.parts();
    if (i == mu.length())
      parts.push_back(1);
    else
      ++parts[i];
    out.push_back({Partition(std::move(parts)), col});
  }
  return out;
}

int added_column(const Partition& lower, const Partition& upper) {
  if (upper.size() != lower.size() + 1) return 0;
  int diff_row = -1;
  for (int i = 0; i < upper.length(); ++i) {
    const int d = upper[i] - lower[i];
    if (d == 0) continue;
    if (d != 1 || diff_row >= 0) return 0;
    diff_row = i;
  }
  if (diff_row < 0 || lower.length() > upper.length()) return 0;
  return upper[diff_row];
}

}  // namespace qsym
