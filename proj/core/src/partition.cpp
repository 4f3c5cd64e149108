#include "qsym/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

std::string describe(const std::vector<int>& parts) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ']';
  return out.str();
}

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // The rest must fit into (slots - 1) parts of size <= part.
    if (static_cast<long long>(part) * slots < remaining) break;
    prefix.push_back(part);
    partitions_rec(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw ValidationError("not a partition: " + describe(parts_));
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_multiplicities(const std::map<int, int>& counts) {
  std::vector<int> parts;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (it->second < 0 || (it->second > 0 && it->first <= 0))
      throw ValidationError("invalid multiplicity entry");
    parts.insert(parts.end(), it->second, it->first);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> counts;
  for (int v : parts_) ++counts[v];
  return counts;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
  for (int v : parts_)
    for (int j = 0; j < v; ++j) ++conj[j];
  return Partition(std::move(conj));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_)
    if (v <= 0) throw ValidationError("composition parts must be positive: " + describe(parts_));
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

bool Composition::is_partition() const noexcept {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Composition::to_partition() const { return Partition(parts_); }

std::vector<Partition> partitions_of(int n, std::optional<int> max_len,
                                     std::optional<int> max_part) {
  if (n < 0) throw ValidationError("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  int slots = max_len.value_or(n);
  int biggest = max_part.value_or(n);
  if (slots < 0 || biggest < 0) return out;
  partitions_rec(n, biggest, slots, prefix, out);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw ValidationError("compositions_of: negative size");
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Bit i of the mask set means "cut after position i+1"; enumerate so that
  // the first part is largest first.
  const unsigned cuts = static_cast<unsigned>(n - 1);
  std::vector<std::vector<int>> all;
  for (unsigned long mask = 0; mask < (1UL << cuts); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (unsigned i = 0; i < cuts; ++i) {
      if (mask & (1UL << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    all.push_back(std::move(parts));
  }
  std::sort(all.begin(), all.end(), std::greater<>());
  out.reserve(all.size());
  for (auto& parts : all) out.emplace_back(std::move(parts));
  return out;
}

std::vector<Composition> refinements(const Composition& alpha) {
  std::vector<std::vector<int>> acc{{}};
  for (int part : alpha.parts()) {
    std::vector<std::vector<int>> next;
    for (const auto& piece : compositions_of(part)) {
      for (const auto& prefix : acc) {
        auto joined = prefix;
        joined.insert(joined.end(), piece.parts().begin(), piece.parts().end());
        next.push_back(std::move(joined));
      }
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), std::greater<>());
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& parts : acc) out.emplace_back(std::move(parts));
  return out;
}

bool dominance_leq(std::span<const int> a, std::span<const int> b) {
  long long sa = std::accumulate(a.begin(), a.end(), 0LL);
  long long sb = std::accumulate(b.begin(), b.end(), 0LL);
  if (sa != sb) throw ValidationError("dominance_leq: sizes differ");
  long long pa = 0, pb = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    pa += i < a.size() ? a[i] : 0;
    pb += i < b.size() ? b[i] : 0;
    if (pa > pb) return false;
  }
  return true;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  return dominance_leq(std::span<const int>(a.parts()), std::span<const int>(b.parts()));
}

std::strong_ordering lex_cmp(const Composition& a, const Composition& b) { return a <=> b; }

std::optional<Partition> subpartition_strip(const Partition& lam, const Partition& pat) {
  auto counts = lam.multiplicities();
  for (const auto& [value, count] : pat.multiplicities()) {
    auto it = counts.find(value);
    if (it == counts.end() || it->second < count) return std::nullopt;
    it->second -= count;
  }
  return Partition::from_multiplicities(counts);
}

Partition oplus(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition componentwise_sum(const Partition& a, const Partition& b) {
  std::vector<int> parts(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = a[i] + b[i];
  return Partition(std::move(parts));
}

}  // namespace qsym
