#include "qsym/conversion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "qsym/errors.hpp"
#include "qsym/quasi_kostka.hpp"
#include "qsym/tableau.hpp"

namespace qsym {

namespace {

void require_basis(const SymFunc& f, Basis b) {
  if (f.basis() != b)
    throw ValidationError("expected a value in the " + std::string(basis_name(b)) + " basis");
}

std::vector<int> weight_of_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> wt;
  for (const auto& row : rows)
    for (int v : row) {
      if (v > static_cast<int>(wt.size())) wt.resize(v, 0);
      ++wt[v - 1];
    }
  return wt;
}

std::vector<int> descent_composition_of_rows(const std::vector<std::vector<int>>& rows, int n) {
  std::vector<int> where(n + 1, 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v : rows[r]) where[v] = static_cast<int>(r);
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i < n; ++i)
    if (where[i + 1] > where[i]) {
      parts.push_back(i - prev);
      prev = i;
    }
  if (n > prev) parts.push_back(n - prev);
  return parts;
}

using Tally = std::map<std::vector<int>, long long>;

SymFunc from_tally(int n, Basis b, const Tally& tally) {
  SymFunc out(n, b);
  for (const auto& [index, c] : tally) out.add_term(index, c);
  return out;
}

// Subset encoding of compositions of n: bit i-1 set iff i is a partial sum.
unsigned long composition_mask(const std::vector<int>& parts) {
  unsigned long mask = 0;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    sum += parts[i];
    mask |= 1UL << (sum - 1);
  }
  return mask;
}

std::vector<int> mask_composition(unsigned long mask, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i < n; ++i)
    if (mask & (1UL << (i - 1))) {
      parts.push_back(i - prev);
      prev = i;
    }
  if (n > 0) parts.push_back(n - prev);
  return parts;
}

constexpr int kMaxTransformDegree = 22;

}  // namespace

SymFunc schur_to_F(const Partition& lam, std::optional<int> max_entry) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, SymFunc> cache;
  const std::pair<Partition, int> key{lam, max_entry.value_or(-1)};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const int n = lam.size();
  Tally via_qyt;
  for_each_qyt(lam, max_entry, [&](const std::vector<std::vector<int>>& rows) {
    ++via_qyt[weight_of_rows(rows)];
  });
  Tally via_syt;
  for_each_syt(lam, [&](const std::vector<std::vector<int>>& rows) {
    auto alpha = descent_composition_of_rows(rows, n);
    if (!max_entry || static_cast<int>(alpha.size()) <= *max_entry) ++via_syt[alpha];
  });
  if (via_qyt != via_syt) throw CrossCheckError("QYT and SYT expansions of a Schur function differ");
  SymFunc out = from_tally(n, Basis::F, via_qyt);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

SymFunc F_to_M(const SymFunc& f) {
  require_basis(f, Basis::F);
  const int n = f.degree();
  SymFunc out(n, Basis::M);
  if (n == 0) {
    out.add_term({}, f.coefficient({}));
    return out;
  }
  if (n <= kMaxTransformDegree) {
    // Refinements of alpha are the supersets of its partial-sum set.
    const unsigned long full = (1UL << (n - 1));
    std::vector<BigInt> coeff(full);
    for (const auto& [index, c] : f.terms()) coeff[composition_mask(index)] += c;
    for (int bit = 0; bit < n - 1; ++bit)
      for (unsigned long s = 0; s < full; ++s)
        if (s & (1UL << bit)) coeff[s] += coeff[s ^ (1UL << bit)];
    for (unsigned long s = 0; s < full; ++s)
      if (coeff[s] != 0) out.add_term(mask_composition(s, n), coeff[s]);
    return out;
  }
  for (const auto& [index, c] : f.terms())
    for (const auto& beta : refinements(Composition(index))) out.add_term(beta.parts(), c);
  return out;
}

bool is_symmetric(const SymFunc& f) {
  const SymFunc m = F_to_M(f);
  std::map<std::vector<int>, BigInt> by_sorted;
  std::map<std::vector<int>, std::size_t> seen;
  for (const auto& [index, c] : m.terms()) {
    auto key = index;
    std::sort(key.begin(), key.end(), std::greater<>());
    auto [it, inserted] = by_sorted.try_emplace(key, c);
    if (!inserted && it->second != c) return false;
    ++seen[key];
  }
  // Every rearrangement must be present with the same nonzero coefficient.
  for (const auto& [key, count] : seen) {
    std::map<int, int> mult;
    for (int v : key) ++mult[v];
    BigInt arrangements = 1;
    int placed = 0;
    for (const auto& [v, k] : mult) {
      for (int i = 1; i <= k; ++i) {
        arrangements *= placed + i;
        arrangements /= i;
      }
      placed += k;
    }
    if (arrangements != count) return false;
  }
  return true;
}

SymFunc schur_expansion_to_F(const SymFunc& g) {
  require_basis(g, Basis::s);
  SymFunc out(g.degree(), Basis::F);
  for (const auto& [index, c] : g.terms()) out += c * schur_to_F(Partition(index));
  return out;
}

SymFunc F_to_schur(const SymFunc& f, const SchurOptions& options) {
  require_basis(f, Basis::F);
  if (!options.skip_symmetry_check && !is_symmetric(f))
    throw ValidationError("input is not a symmetric function");
  const int n = f.degree();
  SymFunc out(n, Basis::s);
  const auto inv = inverse_quasi_kostka(n, options.max_len);
  const auto& idx = inv->index();
  std::vector<BigInt> c(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) c[i] = f.coefficient(idx[i].parts());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    BigInt b = 0;
    for (std::size_t i = 0; i <= j; ++i)
      if (c[i] != 0 && (*inv)(i, j) != 0) b += (*inv)(i, j) * c[i];
    out.add_term(idx[j].parts(), b);
  }
  if (options.verify_round_trip && schur_expansion_to_F(out) != f)
    throw CrossCheckError("Schur expansion does not reproduce the input");
  return out;
}

SymFunc F_to_schur_via_chains(const SymFunc& f, bool skip_symmetry_check) {
  require_basis(f, Basis::F);
  if (!skip_symmetry_check && !is_symmetric(f))
    throw ValidationError("input is not a symmetric function");
  SymFunc out(f.degree(), Basis::s);
  for (const auto& [index, c] : f.terms()) {
    const Composition alpha(index);
    if (!alpha.is_partition()) continue;
    for (const auto& chain : enumerate_chains_from(alpha.to_partition()))
      out.add_term(chain.weight().parts(), c * chain.sign());
  }
  return out;
}

}  // namespace qsym
