#include "qsym/plethysm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "qsym/conversion.hpp"
#include "qsym/errors.hpp"

namespace qsym {

namespace {

void check_guard(const Partition& lam, const Partition& mu, int size_guard) {
  const long long total = static_cast<long long>(lam.size()) * mu.size();
  if (total > size_guard)
    throw SizeGuardError("|lam|*|mu| = " + std::to_string(total) + " exceeds the size guard " +
                         std::to_string(size_guard));
}

// Set partitions of 1..N into |lam| blocks, each block filled as a standard
// tableau of shape mu, then every standard filling of the outer shape by the
// sorted collection.
class StotGenerator {
 public:
  StotGenerator(const Partition& lam, const Partition& mu, const MatrixVisitor& visit)
      : k_(lam.size()), m_(mu.size()), n_(k_ * m_), visit_(visit) {
    for (const auto& t : enumerate_syt(mu)) {
      auto word = t.row_reading_word_top_down();
      for (int& v : word) --v;
      patterns_.push_back(std::move(word));
    }
    for (const auto& t : enumerate_syt(lam)) {
      std::vector<int> ranks;
      for (auto row = t.rows().rbegin(); row != t.rows().rend(); ++row)
        for (int v : *row) ranks.push_back(v - 1);
      outer_orders_.push_back(std::move(ranks));
    }
    words_.assign(k_, std::vector<int>(m_));
    a_.assign(k_, std::vector<int>(m_));
    used_.assign(n_ + 1, false);
    blocks_.assign(k_, {});
  }

  void run() {
    if (k_ == 0 || m_ == 0) {
      // s_empty[s_mu] = s_mu[s_empty] = 1 in degree 0.
      if (n_ == 0) visit_(std::vector<std::vector<int>>(k_, std::vector<int>()));
      return;
    }
    next_block(0);
  }

 private:
  void next_block(int b) {
    if (b == k_) {
      emit();
      return;
    }
    int first = 1;
    while (used_[first]) ++first;
    used_[first] = true;
    blocks_[b].assign(1, first);
    choose(b, first + 1);
    used_[first] = false;
  }

  void choose(int b, int from) {
    auto& block = blocks_[b];
    if (static_cast<int>(block.size()) == m_) {
      for (const auto& p : patterns_) {
        for (int j = 0; j < m_; ++j) words_[b][j] = block[p[j]];
        next_block(b + 1);
      }
      return;
    }
    for (int v = from; v <= n_; ++v) {
      if (used_[v]) continue;
      used_[v] = true;
      block.push_back(v);
      choose(b, v + 1);
      block.pop_back();
      used_[v] = false;
    }
  }

  void emit() {
    // Distinct entries: lex order on the words is decided by the first letter.
    std::vector<int> order(k_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return words_[x][0] < words_[y][0]; });
    for (const auto& ranks : outer_orders_) {
      for (int i = 0; i < k_; ++i) a_[i] = words_[order[ranks[i]]];
      visit_(a_);
    }
  }

  int k_, m_, n_;
  const MatrixVisitor& visit_;
  std::vector<std::vector<int>> patterns_;
  std::vector<std::vector<int>> outer_orders_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> a_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> blocks_;
};

Tableau inner_from_word(const Partition& inner, const std::vector<int>& word) {
  std::vector<std::vector<int>> rows(inner.length());
  std::size_t pos = 0;
  for (int r = inner.length() - 1; r >= 0; --r) {
    if (pos + inner[r] > word.size()) throw ValidationError("matrix row has the wrong length");
    rows[r].assign(word.begin() + static_cast<long>(pos), word.begin() + static_cast<long>(pos + inner[r]));
    pos += inner[r];
  }
  if (pos != word.size()) throw ValidationError("matrix row has the wrong length");
  return Tableau(std::move(rows));
}

}  // namespace

std::vector<std::vector<int>> TableauOfTableaux::matrix() const {
  std::vector<std::vector<int>> a;
  for (auto row = cells.rbegin(); row != cells.rend(); ++row)
    for (const auto& t : *row) a.push_back(t.row_reading_word_top_down());
  return a;
}

TableauOfTableaux TableauOfTableaux::from_matrix(const Partition& outer, const Partition& inner,
                                                 const std::vector<std::vector<int>>& a) {
  if (static_cast<int>(a.size()) != outer.size()) throw ValidationError("matrix has the wrong number of rows");
  TableauOfTableaux t{outer, inner, std::vector<std::vector<Tableau>>(outer.length())};
  std::size_t next = 0;
  for (int r = outer.length() - 1; r >= 0; --r)
    for (int c = 0; c < outer[r]; ++c) t.cells[r].push_back(inner_from_word(inner, a[next++]));
  if (!t.is_valid()) throw ValidationError("not a standard tableau of tableaux");
  return t;
}

bool TableauOfTableaux::is_valid() const {
  const int n = outer.size() * inner.size();
  std::vector<int> seen(n + 1, 0);
  if (static_cast<int>(cells.size()) != outer.length()) return false;
  for (int r = 0; r < outer.length(); ++r) {
    if (static_cast<int>(cells[r].size()) != outer[r]) return false;
    for (int c = 0; c < outer[r]; ++c) {
      const auto& t = cells[r][c];
      if (t.shape() != inner) return false;
      for (int v : t.reading_word()) {
        if (v < 1 || v > n || seen[v]++) return false;
      }
      const auto key = t.row_reading_word_top_down();
      if (c > 0 && !(cells[r][c - 1].row_reading_word_top_down() < key)) return false;
      if (r > 0 && !(cells[r - 1][c].row_reading_word_top_down() < key)) return false;
    }
  }
  return true;
}

void for_each_stot_matrix(const Partition& lam, const Partition& mu, const MatrixVisitor& visit,
                          int size_guard) {
  check_guard(lam, mu, size_guard);
  StotGenerator(lam, mu, visit).run();
}

std::vector<TableauOfTableaux> enumerate_stot(const Partition& lam, const Partition& mu, int size_guard) {
  std::vector<TableauOfTableaux> out;
  for_each_stot_matrix(
      lam, mu,
      [&](const std::vector<std::vector<int>>& a) { out.push_back(TableauOfTableaux::from_matrix(lam, mu, a)); },
      size_guard);
  std::sort(out.begin(), out.end(),
            [](const TableauOfTableaux& x, const TableauOfTableaux& y) { return x.matrix() < y.matrix(); });
  return out;
}

std::uint64_t count_stot(const Partition& lam, const Partition& mu, int size_guard) {
  std::uint64_t count = 0;
  for_each_stot_matrix(lam, mu, [&](const auto&) { ++count; }, size_guard);
  return count;
}

std::vector<int> dynamic_reading_word(const std::vector<std::vector<int>>& a) {
  std::vector<int> word;
  if (a.empty()) return word;
  const std::size_t cols = a.front().size();
  std::vector<std::size_t> order(a.size());
  for (std::size_t k = 0; k < cols; ++k) {
    std::iota(order.begin(), order.end(), 0);
    if (k + 1 < cols)
      std::sort(order.begin(), order.end(),
                [&](std::size_t x, std::size_t y) { return a[x][k + 1] < a[y][k + 1]; });
    for (std::size_t r : order) word.push_back(a[r][k]);
  }
  return word;
}

std::vector<int> dynamic_reading_word(const TableauOfTableaux& t) { return dynamic_reading_word(t.matrix()); }

Composition inverse_descent_composition(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> pos(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int v = word[i];
    if (v < 1 || v > n || pos[v] != -1) throw ValidationError("word is not a permutation");
    pos[v] = i;
  }
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i < n; ++i)
    if (pos[i] > pos[i + 1]) {
      parts.push_back(i - prev);
      prev = i;
    }
  if (n > prev) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

SymFunc plethysm_F(const Partition& lam, const Partition& mu, int size_guard) {
  std::map<std::vector<int>, long long> tally;
  for_each_stot_matrix(
      lam, mu,
      [&](const std::vector<std::vector<int>>& a) {
        const auto word = dynamic_reading_word(a);
        ++tally[inverse_descent_composition(word).parts()];
      },
      size_guard);
  SymFunc out(lam.size() * mu.size(), Basis::F);
  for (const auto& [index, c] : tally) out.add_term(index, c);
  return out;
}

SymFunc plethysm_schur(const Partition& lam, const Partition& mu, int size_guard) {
  return F_to_schur(plethysm_F(lam, mu, size_guard));
}

Partition leading_term(const Partition& lam, const Partition& mu) {
  if (lam.empty() || mu.empty()) throw ValidationError("leading term needs nonempty partitions");
  const int n = lam.size();
  const int k = mu.length();
  std::vector<int> nu;
  for (int i = 0; i + 1 < k; ++i) nu.push_back(n * mu[i]);
  nu.push_back(n * mu[k - 1] - n + lam[0]);
  for (int i = 1; i < lam.length(); ++i) nu.push_back(lam[i]);
  return Partition(std::move(nu));
}

std::optional<std::vector<int>> second_leading_formula(const Partition& lam, const Partition& mu) {
  if (lam.empty() || mu.empty()) throw ValidationError("second leading term needs nonempty partitions");
  const int k = mu.length();
  const int l = lam.length();
  if (mu[k - 1] <= 1 || l <= 2) return std::nullopt;
  const int n = lam.size();
  std::vector<int> kappa;
  for (int i = 0; i + 1 < k; ++i) kappa.push_back(n * mu[i]);
  kappa.push_back(n * mu[k - 1] - n + lam[0] - 1);
  kappa.push_back(lam[1] + 2);
  for (int i = 2; i + 1 < l; ++i) kappa.push_back(lam[i]);
  kappa.push_back(lam[l - 1] - 1);
  while (!kappa.empty() && kappa.back() == 0) kappa.pop_back();
  return kappa;
}

std::optional<Partition> second_leading_term(const Partition& lam, const Partition& mu, int size_guard) {
  auto formula = second_leading_formula(lam, mu);
  if (!formula) return std::nullopt;
  auto describe = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  const bool is_partition = std::is_sorted(formula->begin(), formula->end(), std::greater<>());
  if (static_cast<long long>(lam.size()) * mu.size() > size_guard) {
    if (!is_partition) throw CrossCheckError("second leading formula gives " + describe(*formula) + ", not a partition");
    return Partition(*formula);
  }
  const SymFunc expansion = plethysm_schur(lam, mu, size_guard);
  std::vector<std::pair<std::vector<int>, BigInt>> positive;
  for (const auto& [index, c] : expansion.terms())
    if (c > 0) positive.emplace_back(index, c);
  if (positive.size() < 2) throw CrossCheckError("expansion has fewer than two Schur terms");
  const auto& [second, coeff] = positive[1];
  if (second != *formula || coeff != 1)
    throw CrossCheckError("second leading formula gives " + describe(*formula) + " but the expansion has " +
                          describe(second) + " with coefficient " + to_decimal(coeff));
  return Partition(second);
}

}  // namespace qsym
