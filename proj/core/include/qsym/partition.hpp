#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace qsym {

/// Integer partition stored as a weakly decreasing sequence of positive
/// parts. Trailing zeros handed to the constructor are dropped, so two
/// partitions compare equal iff their nonzero parts agree.
///
/// The default ordering is lexicographic on the part sequence, where a
/// proper prefix is smaller. Reverse-lex listings are descending in this
/// order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Builds a partition from a value -> count map (zero counts ignored).
  static Partition from_multiplicities(const std::map<int, int>& counts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part (0-based), zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  int multiplicity(int value) const noexcept;
  std::map<int, int> multiplicities() const;
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);
  explicit Composition(const Partition& p) : parts_(p.parts()), size_(p.size()) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  bool is_partition() const noexcept;
  /// Throws ValidationError when the parts are not weakly decreasing.
  Partition to_partition() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n with at most max_len parts, each at most max_part,
/// in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n, std::optional<int> max_len = std::nullopt,
                                     std::optional<int> max_part = std::nullopt);

/// All 2^(n-1) compositions of n (one empty composition for n = 0), in
/// decreasing lexicographic order.
std::vector<Composition> compositions_of(int n);

/// Compositions beta that refine alpha (merge-coarsening gives alpha back).
std::vector<Composition> refinements(const Composition& alpha);

/// Dominance on sequences of equal total: every partial sum of a is at most
/// the corresponding partial sum of b. Throws ValidationError on size mismatch.
bool dominance_leq(std::span<const int> a, std::span<const int> b);
bool dominance_leq(const Partition& a, const Partition& b);

std::strong_ordering lex_cmp(const Composition& a, const Composition& b);

/// Multiplicity-wise difference lam - pat, when pat is a subpartition.
std::optional<Partition> subpartition_strip(const Partition& lam, const Partition& pat);

/// Multiplicity-wise union: the partition whose multiset of parts is the
/// union of both.
Partition oplus(const Partition& a, const Partition& b);

/// Componentwise sum, padding the shorter one with zeros.
Partition componentwise_sum(const Partition& a, const Partition& b);

}  // namespace qsym

template <>
struct std::hash<qsym::Partition> {
  std::size_t operator()(const qsym::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};

template <>
struct std::hash<qsym::Composition> {
  std::size_t operator()(const qsym::Composition& c) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ULL;
    for (int v : c.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
    return h;
  }
};
