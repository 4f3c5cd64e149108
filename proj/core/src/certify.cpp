#include "qsym/certify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qsym/errors.hpp"
#include "qsym/text_io.hpp"

namespace qsym {

bool CertifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& CertifyReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw ValidationError("no check named " + name);
}

std::string CertifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.passed ? "ok" : "FAILED") << '\n';
    for (const auto& v : c.violations) out << "  " << v << '\n';
  }
  return out.str();
}

bool matches_pattern(const std::vector<int>& labels, int w) {
  const std::size_t n = labels.size();
  const std::size_t first_one =
      static_cast<std::size_t>(std::find(labels.begin(), labels.end(), 1) - labels.begin());
  for (std::size_t j = 0; j <= first_one && j <= n; ++j) {
    if ((n - j) % static_cast<std::size_t>(w) != 0) continue;
    if (j == n) return true;
    std::vector<int> perm(labels.begin() + static_cast<long>(j), labels.begin() + static_cast<long>(j) + w);
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = true;
    for (int i = 0; i < w; ++i) is_perm = is_perm && sorted[i] == i + 1;
    if (!is_perm) continue;
    bool repeats = true;
    for (std::size_t i = j; i < n && repeats; ++i) repeats = labels[i] == perm[(i - j) % w];
    if (repeats) return true;
  }
  return false;
}

namespace {

std::string chain_text(const std::vector<Partition>& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? " < " : "") + format_partition(chain[i]);
  return s;
}

constexpr std::size_t kMaxListed = 20;

void flag(CheckResult& c, std::string message) {
  c.passed = false;
  if (c.violations.size() < kMaxListed) c.violations.push_back(std::move(message));
}

// Cover, saturation and symmetry of `chains` as a decomposition of L(w,h).
void decomposition_checks(const std::vector<std::vector<Partition>>& chains, int w, int h, CheckResult& cover,
                          CheckResult& saturated, CheckResult& symmetric) {
  const BoxLattice box(w, h);
  std::set<Partition> seen;
  for (const auto& chain : chains) {
    if (chain.empty()) {
      flag(cover, "empty chain");
      continue;
    }
    for (const auto& p : chain) {
      if (!box.contains(p)) flag(cover, format_partition(p) + " lies outside the box");
      if (!seen.insert(p).second) flag(cover, format_partition(p) + " appears twice");
    }
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (added_column(chain[i - 1], chain[i]) == 0)
        flag(saturated, format_partition(chain[i - 1]) + " -> " + format_partition(chain[i]) +
                            " is not a cover in " + chain_text(chain));
    if (chain.front().size() + chain.back().size() != box.max_rank())
      flag(symmetric, "ranks " + std::to_string(chain.front().size()) + " + " +
                          std::to_string(chain.back().size()) + " != " + std::to_string(box.max_rank()) +
                          " for " + chain_text(chain));
  }
  if (seen.size() != box.cardinality())
    flag(cover, "covers " + std::to_string(seen.size()) + " of " + std::to_string(box.cardinality()) +
                    " elements");
}

}  // namespace

CertifyReport certify(const ChainDecomposition& d) {
  CheckResult cover{"cover"}, saturated{"saturation"}, symmetric{"rank-symmetry"}, restriction{"restriction"},
      extension{"extension"}, pattern{"pattern"};
  decomposition_checks(d.chains, d.w, d.h, cover, saturated, symmetric);

  if (d.h > 0) {
    const BoxLattice big(d.w, d.h), small(d.w, d.h - 1);
    std::vector<std::vector<Partition>> restricted;
    for (const auto& chain : d.chains) {
      std::vector<Partition> kept;
      bool left = false;
      for (const auto& p : chain) {
        if (small.contains(p)) {
          if (left) flag(restriction, "restricted elements are not a prefix of " + chain_text(chain));
          kept.push_back(p);
        } else {
          left = true;
        }
      }
      if (kept.empty() || !big.contains(chain.back())) continue;
      if (big.complement(chain.back()) != small.complement(kept.back()))
        flag(extension, "complements of " + format_partition(chain.back()) + " and " +
                            format_partition(kept.back()) + " differ");
      restricted.push_back(std::move(kept));
    }
    CheckResult sub_cover{"cover"}, sub_saturated{"saturation"}, sub_symmetric{"rank-symmetry"};
    decomposition_checks(restricted, d.w, d.h - 1, sub_cover, sub_saturated, sub_symmetric);
    for (const auto* sub : {&sub_cover, &sub_saturated, &sub_symmetric})
      for (const auto& v : sub->violations) flag(restriction, "restricted " + sub->name + ": " + v);
    if (!sub_cover.passed || !sub_saturated.passed || !sub_symmetric.passed) restriction.passed = false;
  }

  const auto labels = d.edge_labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!matches_pattern(labels[i], d.w)) flag(pattern, "labels do not follow a pattern in " + chain_text(d.chains[i]));

  CertifyReport report;
  report.checks = {cover, saturated, symmetric, restriction, extension, pattern};
  return report;
}

}  // namespace qsym
