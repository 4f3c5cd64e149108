#include "qsym/tableau.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "qsym/errors.hpp"

namespace qsym {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw ValidationError("tableau has an empty inner row");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw ValidationError("tableau rows do not form a partition shape");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= 0) throw ValidationError("tableau entries must be positive");
      if (c > 0 && row[c] < row[c - 1]) throw ValidationError("tableau row decreases");
      if (r > 0 && row[c] <= rows_[r - 1][c]) throw ValidationError("tableau column not strict");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const noexcept {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

int Tableau::max_entry() const noexcept {
  int m = 0;
  for (const auto& row : rows_)
    if (!row.empty()) m = std::max(m, row.back());
  return m;
}

std::vector<int> Tableau::weight() const {
  std::vector<int> wt(max_entry(), 0);
  for (const auto& row : rows_)
    for (int v : row) ++wt[v - 1];
  return wt;
}

bool Tableau::is_standard() const {
  auto wt = weight();
  return static_cast<int>(wt.size()) == size() &&
         std::all_of(wt.begin(), wt.end(), [](int c) { return c == 1; });
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::vector<int> Tableau::row_reading_word_top_down() const {
  std::vector<int> word;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

std::vector<int> Tableau::rows_of_entries() const {
  std::vector<int> where(size(), -1);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (int v : rows_[r]) {
      if (v > static_cast<int>(where.size()) || where[v - 1] != -1)
        throw ValidationError("tableau is not standard");
      where[v - 1] = static_cast<int>(r);
    }
  return where;
}

Tableau superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < shape.length(); ++r) rows.emplace_back(shape[r], r + 1);
  return Tableau(std::move(rows));
}

namespace {

// Fills a shape letter by letter, each letter occupying a horizontal strip.
// Every semistandard filling arises exactly once this way.
class StripFiller {
 public:
  struct Spec {
    const std::vector<int>* weight = nullptr;  // fixed content, or free
    int max_letter = 0;
    bool allow_empty = false;        // free mode: letters may be skipped
    bool quasi_yamanouchi = false;   // prune to QYT
  };

  StripFiller(const Partition& shape, Spec spec) : target_(shape.parts()), spec_(spec) {
    filled_.assign(target_.size(), 0);
    rows_.assign(target_.size(), {});
    remaining_ = shape.size();
    min_row_.assign(static_cast<std::size_t>(spec.max_letter) + 2, kNone);
  }

  template <class Visit>
  void run(Visit&& visit) {
    letter_step(1, visit);
  }

 private:
  static constexpr int kNone = std::numeric_limits<int>::max();

  template <class Visit>
  void letter_step(int letter, Visit& visit) {
    if (remaining_ == 0) {
      if (!spec_.weight || letter - 1 == static_cast<int>(spec_.weight->size())) visit(rows_);
      return;
    }
    if (letter > spec_.max_letter) return;
    if (spec_.weight && letter > static_cast<int>(spec_.weight->size())) return;
    const int want = spec_.weight ? (*spec_.weight)[letter - 1] : -1;
    old_.push_back(filled_);
    strip_row(letter, 0, want, 0, -1, visit);
    old_.pop_back();
  }

  template <class Visit>
  void strip_row(int letter, std::size_t r, int left, int placed, int top_row, Visit& visit) {
    const auto& old = old_.back();
    if (r == target_.size() || (left == 0)) {
      if (left > 0) return;
      if (placed == 0 && !spec_.weight && !spec_.allow_empty) return;
      if (spec_.quasi_yamanouchi && placed > 0 && letter > 1) {
        const int prev_min = min_row_[letter - 1];
        if (prev_min == kNone || top_row <= prev_min) return;
      }
      if (spec_.quasi_yamanouchi && placed == 0 && spec_.weight) return;
      const int saved = min_row_[letter];
      min_row_[letter] = placed > 0 ? lowest_row_of(letter) : kNone;
      letter_step(letter + 1, visit);
      min_row_[letter] = saved;
      return;
    }
    int cap = target_[r] - old[r];
    if (r > 0) cap = std::min(cap, old[r - 1] - old[r]);
    if (left >= 0) cap = std::min(cap, left);
    for (int c = cap; c >= 0; --c) {
      rows_[r].insert(rows_[r].end(), c, letter);
      filled_[r] += c;
      remaining_ -= c;
      strip_row(letter, r + 1, left >= 0 ? left - c : -1, placed + c,
                c > 0 ? static_cast<int>(r) : top_row, visit);
      remaining_ += c;
      filled_[r] -= c;
      rows_[r].resize(rows_[r].size() - c);
    }
  }

  int lowest_row_of(int letter) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (std::find(rows_[r].begin(), rows_[r].end(), letter) != rows_[r].end())
        return static_cast<int>(r);
    return kNone;
  }

  std::vector<int> target_;
  Spec spec_;
  std::vector<int> filled_;
  std::vector<std::vector<int>> old_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> min_row_;
  int remaining_ = 0;
};

void sort_by_reading_word(std::vector<Tableau>& out) {
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.reading_word() < b.reading_word();
  });
}

std::vector<Tableau> collect(const Partition& shape, StripFiller::Spec spec) {
  std::vector<Tableau> out;
  StripFiller(shape, spec).run([&](const std::vector<std::vector<int>>& rows) {
    out.emplace_back(rows);
  });
  sort_by_reading_word(out);
  return out;
}

void require_same_size(const Partition& shape, const Composition& weight) {
  if (shape.size() != weight.size()) throw ValidationError("shape and weight sizes differ");
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Composition& weight) {
  require_same_size(shape, weight);
  StripFiller::Spec spec;
  spec.weight = &weight.parts();
  spec.max_letter = weight.length();
  return collect(shape, spec);
}

std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int max_entry) {
  StripFiller::Spec spec;
  spec.max_letter = std::max(max_entry, 0);
  spec.allow_empty = true;
  return collect(shape, spec);
}

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  return enumerate_ssyt(shape, Composition(std::vector<int>(shape.size(), 1)));
}

std::uint64_t kostka_number(const Partition& shape, const Composition& weight) {
  require_same_size(shape, weight);
  StripFiller::Spec spec;
  spec.weight = &weight.parts();
  spec.max_letter = weight.length();
  std::uint64_t count = 0;
  StripFiller(shape, spec).run([&](const auto&) { ++count; });
  return count;
}

std::vector<int> descent_set(const Tableau& t) {
  if (!t.is_standard()) throw ValidationError("descents require a standard tableau");
  const auto where = t.rows_of_entries();
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < where.size(); ++i)
    if (where[i + 1] > where[i]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Composition descent_composition(const Tableau& t) {
  const auto descents = descent_set(t);
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    parts.push_back(d - prev);
    prev = d;
  }
  if (t.size() > prev) parts.push_back(t.size() - prev);
  return Composition(std::move(parts));
}

Tableau standardize(const Tableau& t) {
  // Cells of each letter form a horizontal strip, so sorting by column is a
  // total order on them.
  std::map<int, std::vector<std::pair<int, int>>> cells;  // letter -> (col,row)
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      cells[rows[r][c]].emplace_back(static_cast<int>(c), static_cast<int>(r));
  auto out = rows;
  int next = 1;
  for (auto& [letter, where] : cells) {
    std::sort(where.begin(), where.end());
    for (auto [c, r] : where) out[r][c] = next++;
  }
  return Tableau(std::move(out));
}

Tableau destandardize(const Tableau& t) {
  const auto descents = descent_set(t);
  std::vector<int> block(t.size() + 1, 0);
  int letter = 1;
  std::size_t next_descent = 0;
  for (int v = 1; v <= t.size(); ++v) {
    block[v] = letter;
    if (next_descent < descents.size() && descents[next_descent] == v) {
      ++letter;
      ++next_descent;
    }
  }
  auto rows = t.rows();
  for (auto& row : rows)
    for (int& v : row) v = block[v];
  return Tableau(std::move(rows));
}

bool is_quasi_yamanouchi(const Tableau& t) {
  const int m = t.max_entry();
  std::vector<int> lo(m + 1, std::numeric_limits<int>::max()), hi(m + 1, -1);
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v : rows[r]) {
      lo[v] = std::min(lo[v], static_cast<int>(r));
      hi[v] = std::max(hi[v], static_cast<int>(r));
    }
  for (int i = 2; i <= m; ++i) {
    if (hi[i] < 0) continue;
    if (hi[i - 1] < 0) return false;
    if (hi[i] <= lo[i - 1]) return false;
  }
  return true;
}

Composition weight_composition(const Tableau& t) {
  auto wt = t.weight();
  if (std::find(wt.begin(), wt.end(), 0) != wt.end())
    throw CrossCheckError("tableau weight has an internal zero");
  return Composition(std::move(wt));
}

std::vector<Tableau> enumerate_qyt(const Partition& shape, const std::optional<Composition>& weight,
                                   std::optional<int> max_entry) {
  StripFiller::Spec spec;
  spec.quasi_yamanouchi = true;
  if (weight) {
    require_same_size(shape, *weight);
    spec.weight = &weight->parts();
    spec.max_letter = weight->length();
    if (max_entry && *max_entry < weight->length()) return {};
  } else {
    spec.max_letter = max_entry ? std::min(*max_entry, shape.size()) : shape.size();
  }
  return collect(shape, spec);
}

void for_each_syt(const Partition& shape, const RowsVisitor& visit) {
  const std::vector<int> ones(shape.size(), 1);
  StripFiller::Spec spec;
  spec.weight = &ones;
  spec.max_letter = shape.size();
  StripFiller(shape, spec).run(visit);
}

void for_each_qyt(const Partition& shape, std::optional<int> max_entry, const RowsVisitor& visit) {
  StripFiller::Spec spec;
  spec.quasi_yamanouchi = true;
  spec.max_letter = max_entry ? std::min(*max_entry, shape.size()) : shape.size();
  StripFiller(shape, spec).run(visit);
}

std::uint64_t quasi_kostka(const Partition& shape, const Composition& alpha) {
  require_same_size(shape, alpha);
  StripFiller::Spec spec;
  spec.quasi_yamanouchi = true;
  spec.weight = &alpha.parts();
  spec.max_letter = alpha.length();
  std::uint64_t count = 0;
  StripFiller(shape, spec).run([&](const auto&) { ++count; });
  return count;
}

}  // namespace qsym
