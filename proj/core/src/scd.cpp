#include "qsym/scd.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qsym/errors.hpp"
#include "qsym/two_variable.hpp"

namespace qsym {

std::vector<std::vector<int>> ChainDecomposition::edge_labels() const {
  std::vector<std::vector<int>> out;
  out.reserve(chains.size());
  for (const auto& chain : chains) {
    std::vector<int> labels;
    for (std::size_t i = 1; i < chain.size(); ++i) labels.push_back(added_column(chain[i - 1], chain[i]));
    out.push_back(std::move(labels));
  }
  return out;
}

void ChainDecomposition::canonicalize() {
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    if (a.front().size() != b.front().size()) return a.front().size() < b.front().size();
    return a.front() > b.front();
  });
}

std::vector<Partition> ChainDecomposition::minima() const {
  std::vector<Partition> out;
  for (const auto& c : chains)
    if (!c.empty()) out.push_back(c.front());
  return out;
}

std::vector<Partition> ChainDecomposition::maxima() const {
  std::vector<Partition> out;
  for (const auto& c : chains)
    if (!c.empty()) out.push_back(c.back());
  return out;
}

Partition add_cell(const Partition& lam, int column) {
  auto parts = lam.parts();
  if (column == 1) {
    parts.push_back(1);
    return Partition(std::move(parts));
  }
  auto it = std::find(parts.begin(), parts.end(), column - 1);
  if (column < 1 || it == parts.end()) throw ValidationError("cannot add a cell in column " + std::to_string(column));
  ++*it;
  return Partition(std::move(parts));
}

Partition remove_cell(const Partition& lam, int column) {
  auto parts = lam.parts();
  auto it = std::find(parts.rbegin(), parts.rend(), column);
  if (column < 1 || it == parts.rend()) throw ValidationError("cannot remove a cell from column " + std::to_string(column));
  --*it;
  return Partition(std::move(parts));
}

namespace {

bool in_box(const Partition& lam, int w, int h) { return lam.length() <= h && lam[0] <= w; }

const Partition& pattern_w3() {
  static const Partition p{3, 1, 1, 1};
  return p;
}
const Partition& pattern_411() {
  static const Partition p{4, 1, 1};
  return p;
}
const Partition& pattern_22() {
  static const Partition p{2, 2};
  return p;
}

std::optional<Step> apply(const Partition& lam, const OperatorStep& s) {
  if (s.column == 0) return std::nullopt;
  if (s.direction == Direction::f) return Step{add_cell(lam, s.column), s.column};
  return Step{remove_cell(lam, s.column), s.column};
}

template <class Stratum>
void require_stratum(const Partition& lam, int h, Stratum in_stratum, const char* name) {
  if (!in_stratum(lam, h)) throw ValidationError(std::string("partition is outside ") + name);
}

template <class Stratum>
std::optional<Step> checked(const Partition& lam, int h, const OperatorStep& s, Stratum in_stratum) {
  auto step = apply(lam, s);
  if (step && !in_stratum(step->target, h))
    throw CrossCheckError("operator case " + s.case_id + " left the stratum");
  return step;
}

std::vector<Partition> follow_f(Partition start, int h, std::optional<Step> (*f)(const Partition&, int)) {
  std::vector<Partition> chain{start};
  while (auto step = f(chain.back(), h)) chain.push_back(step->target);
  return chain;
}

Partition ones(int m) { return Partition(std::vector<int>(m, 1)); }

void append_shifted(ChainDecomposition& into, const ChainDecomposition& from, const Partition& pattern) {
  for (const auto& chain : from.chains) {
    std::vector<Partition> shifted;
    shifted.reserve(chain.size());
    for (const auto& p : chain) shifted.push_back(oplus(p, pattern));
    into.chains.push_back(std::move(shifted));
  }
}

}  // namespace

bool in_stratum_w3(const Partition& lam, int h) {
  return in_box(lam, 3, h) && (lam.multiplicity(3) == 0 || lam.multiplicity(1) <= 2);
}

OperatorStep classify_w3(const Partition& lam, int h, Direction d) {
  require_stratum(lam, h, in_stratum_w3, "L'(3,h)");
  const int m1 = lam.multiplicity(1), m2 = lam.multiplicity(2), m3 = lam.multiplicity(3);
  const bool f = d == Direction::f;
  const bool room = lam.length() < h;
  OperatorStep s;
  s.direction = d;
  const bool phase1 = m3 == 0 && (((m1 + m2) % 2 == 0 && m1 >= 1) || ((m1 + m2) % 2 == 1 && m1 > 2));
  if (phase1) {
    s.phase = 1;
    s.case_id = (m1 + m2) % 2 == 1 ? "1" : "2";
    s.column = f ? 2 : (m2 > 0 ? 2 : 0);
    return s;
  }
  s.phase = 2;
  if (m1 == 0 && m2 % 2 == 0) {
    s.case_id = "3";
    s.column = f ? (room ? 1 : 0) : (m3 > 0 ? 3 : (lam.empty() ? 0 : 2));
  } else if (m1 == 0) {
    s.case_id = "4";
    s.column = f ? 3 : 2;
  } else if (m1 == 1 && m2 % 2 == 0) {
    s.case_id = "5";
    s.column = f ? 2 : 1;
  } else if (m1 == 1) {
    s.case_id = "6";
    s.column = f ? (room ? 1 : 0) : 2;
  } else if (m1 == 2 && m2 % 2 == 0) {
    s.case_id = "7";
    s.column = f ? 2 : 3;
  } else if (m1 == 2) {
    s.case_id = "8";
    s.column = f ? 3 : (m3 == 0 ? 2 : 1);
  } else {
    throw CrossCheckError("no width-3 operator case applies");
  }
  return s;
}

std::optional<Step> f3(const Partition& lam, int h) {
  return checked(lam, h, classify_w3(lam, h, Direction::f), in_stratum_w3);
}

std::optional<Step> e3(const Partition& lam, int h) {
  return checked(lam, h, classify_w3(lam, h, Direction::e), in_stratum_w3);
}

bool in_prime_stratum_w4(const Partition& lam, int h) {
  return in_box(lam, 4, h) && (lam.multiplicity(4) == 0 || lam.multiplicity(1) <= 1);
}

bool in_stratum_w4(const Partition& lam, int h) {
  return in_prime_stratum_w4(lam, h) && lam.multiplicity(2) <= 1;
}

OperatorStep classify_w4(const Partition& lam, int h, Direction d) {
  require_stratum(lam, h, in_stratum_w4, "L''(4,h)");
  const int m1 = lam.multiplicity(1), m2 = lam.multiplicity(2), m3 = lam.multiplicity(3),
            m4 = lam.multiplicity(4);
  const int len = m1 + m2 + m3;
  const bool f = d == Direction::f;
  OperatorStep s;
  s.direction = d;
  const bool phase1 = m4 == 0 && ((len % 2 == 0 && m1 + m2 >= 1) || (len % 2 == 1 && m1 > 1));
  if (phase1) {
    s.phase = 1;
    s.case_id = std::string(len % 2 == 0 ? "1" : "2") + (m2 == 0 ? "a" : "b");
    if (m2 == 0)
      s.column = f ? 2 : (m3 == 0 ? 0 : 3);
    else
      s.column = f ? 3 : 2;
    return s;
  }
  s.phase = 2;
  const bool even3 = m3 % 2 == 0;
  if (m1 == 0 && m2 == 0 && even3) {
    s.case_id = "3";
    s.column = f ? (lam.length() < h ? 1 : 0) : (m4 > 0 ? 4 : (m3 > 0 ? 3 : 0));
  } else if (m1 == 1 && m2 == 0 && even3) {
    s.case_id = "4";
    s.column = f ? 2 : 1;
  } else if (m1 == 0 && m2 == 1 && even3) {
    s.case_id = "5";
    s.column = f ? 3 : 2;
  } else if (m1 == 0 && m2 == 0) {
    s.case_id = "6";
    s.column = f ? 4 : 3;
  } else if (m1 == 1 && m2 == 1 && !even3) {
    s.case_id = "7";
    s.column = f ? 4 : (m4 > 0 ? 1 : 2);
  } else if (m1 == 1 && m2 == 1) {
    s.case_id = "8";
    s.column = f ? 3 : 4;
  } else if (m1 == 1 && m2 == 0) {
    s.case_id = "9";
    s.column = f ? 2 : 3;
  } else if (m1 == 0 && m2 == 1) {
    s.case_id = "10";
    s.column = f ? (m2 + m3 + m4 == h ? 0 : 1) : 2;
  } else {
    throw CrossCheckError("no width-4 operator case applies");
  }
  return s;
}

std::optional<Step> f4(const Partition& lam, int h) {
  return checked(lam, h, classify_w4(lam, h, Direction::f), in_stratum_w4);
}

std::optional<Step> e4(const Partition& lam, int h) {
  return checked(lam, h, classify_w4(lam, h, Direction::e), in_stratum_w4);
}

ChainDecomposition scd_w2(int h) {
  if (h < 0) throw ValidationError("height must be nonnegative");
  ChainDecomposition d{2, h, {}};
  for (int m1 = 0; m1 <= h; m1 += 2) {
    std::vector<Partition> chain{ones(m1)};
    for (int i = 0; i < 2 * (h - m1); ++i) chain.push_back(add_cell(chain.back(), i % 2 == 0 ? 1 : 2));
    d.chains.push_back(std::move(chain));
  }
  d.canonicalize();
  return d;
}

ChainDecomposition scd_w3(int h) {
  if (h < 0) throw ValidationError("height must be nonnegative");
  ChainDecomposition d{3, h, {}};
  for (int m1 = 0; m1 <= h; ++m1)
    if (m1 != 1) d.chains.push_back(follow_f(ones(m1), h, f3));
  if (h >= 4) append_shifted(d, scd_w3(h - 4), pattern_w3());
  d.canonicalize();
  return d;
}

ChainDecomposition scd_prime_w4(int h) {
  if (h < 0) throw ValidationError("height must be nonnegative");
  ChainDecomposition d{4, h, {}};
  for (int m1 = 0; m1 <= h; ++m1)
    if (m1 != 1) d.chains.push_back(follow_f(ones(m1), h, f4));
  if (h >= 2) append_shifted(d, scd_prime_w4(h - 2), pattern_22());
  d.canonicalize();
  return d;
}

ChainDecomposition scd_w4(int h) {
  ChainDecomposition d = scd_prime_w4(h);
  if (h >= 3) append_shifted(d, scd_w4(h - 3), pattern_411());
  d.canonicalize();
  return d;
}

ChainDecomposition build_scd(int w, int h) {
  switch (w) {
    case 2: return scd_w2(h);
    case 3: return scd_w3(h);
    case 4: return scd_w4(h);
    default: throw ValidationError("chain decompositions are available for widths 2, 3 and 4 only");
  }
}

namespace {

Partition from_counts(std::initializer_list<std::pair<int, int>> counts) {
  std::map<int, int> m;
  for (auto [v, c] : counts) m[v] += c;
  return Partition::from_multiplicities(m);
}

void require_width(int w) {
  if (w < 2 || w > 4) throw ValidationError("closed forms are available for widths 2, 3 and 4 only");
}

}  // namespace

std::set<Partition> minima_closed_form(int w, int h) {
  require_width(w);
  std::set<Partition> out;
  if (w == 2) {
    for (int m1 = 0; m1 <= h; m1 += 2) out.insert(ones(m1));
  } else if (w == 3) {
    for (int m3 = 0; m3 <= h; ++m3)
      for (int m1 = 3 * m3; m1 + m3 <= h; ++m1)
        if (m1 != 3 * m3 + 1) out.insert(from_counts({{3, m3}, {1, m1}}));
  } else {
    for (int m4 = 0; m4 <= h; ++m4)
      for (int m2 = 0; m4 + m2 <= h; m2 += 2)
        for (int m1 = 2 * m4; m1 + m2 + m4 <= h; ++m1)
          if (m1 != 2 * m4 + 1) out.insert(from_counts({{4, m4}, {2, m2}, {1, m1}}));
  }
  return out;
}

std::set<Partition> maxima_from_minima(int w, int h) {
  require_width(w);
  std::set<Partition> out;
  for (const auto& mn : minima_closed_form(w, h)) {
    if (w == 2) {
      const int m1 = mn.multiplicity(1);
      out.insert(from_counts({{2, h - m1}, {1, m1}}));
    } else if (w == 3) {
      // mn = 3^{m3} 1^{m1 + 3 m3}
      const int m3 = mn.multiplicity(3);
      const int m1 = mn.multiplicity(1) - 3 * m3;
      if (m1 % 2 == 0)
        out.insert(from_counts({{3, h - m1 - 3 * m3}, {2, m1}, {1, 3 * m3}}));
      else
        out.insert(from_counts({{3, h - m1 - 3 * m3 + 1}, {2, m1 - 2}, {1, 3 * m3 + 1}}));
    } else {
      // mn = 4^{m4} 2^{2 m2} 1^{m1 + 2 m4}
      const int m4 = mn.multiplicity(4);
      const int m2 = mn.multiplicity(2) / 2;
      const int m1 = mn.multiplicity(1) - 2 * m4;
      if (m1 % 2 == 0)
        out.insert(from_counts({{4, h - m1 - 2 * m2 - 2 * m4}, {3, m1}, {2, 2 * m2}, {1, 2 * m4}}));
      else
        out.insert(from_counts({{4, h - m1 - 2 * m2 - 2 * m4 + 1}, {3, m1 - 2}, {2, 2 * m2 + 1}, {1, 2 * m4}}));
    }
  }
  return out;
}

std::set<Partition> maxima_by_complement(int w, int h) {
  require_width(w);
  const BoxLattice box(w, h);
  std::set<Partition> out;
  for (const auto& lam : box.elements()) {
    const Partition c = box.complement(lam);
    const int m1 = c.multiplicity(1), m2 = c.multiplicity(2), m3 = c.multiplicity(3);
    bool ok = false;
    if (w == 2) {
      ok = m2 == 0 && m1 % 2 == 0;
    } else if (w == 3) {
      ok = m3 == 0 && 3 * m1 <= 3 * h - 4 * m2 && ((m1 % 2 == 0) == (m2 % 3 == 0)) &&
           ((m1 % 2 == 1) == (m2 % 3 == 1));
    } else {
      // Equality in the length bound occurs only when m1 and m2 are both even.
      const int twice = 2 * (m1 + m2), bound = 2 * h - 3 * m3;
      ok = c.multiplicity(4) == 0 && m3 % 2 == 0 && (m1 + m2) % 2 == 0 && twice <= bound &&
           (twice < bound || (m1 % 2 == 0 && m2 % 2 == 0));
    }
    if (ok) out.insert(lam);
  }
  return out;
}

TwoRowPoly scd_coefficients(int w, int h) {
  require_width(w);
  const ChainDecomposition d = build_scd(w, h);
  TwoRowPoly from_chains(w * h), closed(w * h);
  for (const auto& mn : d.minima()) from_chains.add(w * h - mn.size(), mn.size(), 1);
  for (const auto& mn : minima_closed_form(w, h)) closed.add(w * h - mn.size(), mn.size(), 1);
  if (from_chains != closed)
    throw CrossCheckError("chain minima disagree with the closed-form minimal elements");
  return from_chains;
}

}  // namespace qsym
