#include <doctest.h>
#include <oracle.hpp>

using namespace qsym;

namespace {

Partition P(std::initializer_list<std::pair<const int, int>> m) { return Partition::from_multiplicities(m); }

using oracle::ones;

// Disjoint exact cover, saturation and rank symmetry, checked directly.
bool is_scd(const ChainDecomposition& d) {
  std::multiset<std::vector<int>> seen;
  for (const auto& c : d.chains) {
    if (c.empty()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      seen.insert(c[i].parts());
      if (i > 0) {
        const auto& a = c[i - 1].parts();
        const auto& b = c[i].parts();
        int diff = 0;
        for (std::size_t k = 0; k < b.size(); ++k) {
          const int lo = k < a.size() ? a[k] : 0;
          if (b[k] < lo) return false;
          diff += b[k] - lo;
        }
        if (a.size() > b.size() || diff != 1) return false;
      }
    }
    if (c.front().size() + c.back().size() != d.w * d.h) return false;
  }
  const auto box = oracle::box(d.w, d.h);
  return seen == std::multiset<std::vector<int>>(box.begin(), box.end());
}

template <class F>
std::vector<Partition> walk(Partition start, int h, F op) {
  std::vector<Partition> out{start};
  while (auto s = op(out.back(), h)) out.push_back(s->target);
  return out;
}

// Highest and lowest weight of the chain through lam, as stated case by case.
std::pair<Partition, Partition> stated_ends_w3(const Partition& lam, int h) {
  const int m1 = lam.multiplicity(1), m2 = lam.multiplicity(2);
  const std::string id = classify_w3(lam, h, Direction::f).case_id;
  const int l = m1 + m2;
  if (id == "1") return {ones(l), P({{3, h - l + 1}, {2, l - 2}, {1, 1}})};
  if (id == "2") return {ones(l), P({{3, h - l}, {2, l}})};
  if (id == "3" || id == "5") return {ones(m2), P({{3, h - m2}, {2, m2}})};
  if (id == "4") return {ones(m2 - 1), P({{3, h - m2 + 1}, {2, m2 - 1}})};
  if (id == "6" || id == "8") return {ones(m2 + 2), P({{3, h - m2 - 1}, {2, m2}, {1, 1}})};
  return {ones(m2 + 3), P({{3, h - m2 - 2}, {2, m2 + 1}, {1, 1}})};
}

std::pair<Partition, Partition> stated_ends_w4(const Partition& lam, int h) {
  const int m3 = lam.multiplicity(3);
  const std::string id = classify_w4(lam, h, Direction::f).case_id;
  const int l = lam.length();
  if (id == "1a" || id == "1b") return {ones(l), P({{4, h - l}, {3, l}})};
  if (id == "2a" || id == "2b") return {ones(l), P({{4, h - l + 1}, {3, l - 2}, {2, 1}})};
  if (id == "3" || id == "4" || id == "5") return {ones(m3), P({{4, h - m3}, {3, m3}})};
  if (id == "6") return {ones(m3 - 1), P({{4, h - m3 + 1}, {3, m3 - 1}})};
  if (id == "8") return {ones(m3 + 3), P({{4, h - m3 - 2}, {3, m3 + 1}, {2, 1}})};
  return {ones(m3 + 2), P({{4, h - m3 - 1}, {3, m3}, {2, 1}})};
}

ChainDecomposition golden(const std::string& name) { return chains_from_json(oracle::read_file(oracle::data_path(name))); }

}  // namespace

TEST_SUITE("width 2") {
  TEST_CASE("small heights") {
    const auto d0 = scd_w2(0);
    REQUIRE(d0.chains.size() == 1);
    CHECK(d0.chains[0] == std::vector<Partition>{Partition{}});
    const auto d2 = scd_w2(2);
    CHECK(d2.chains.size() == 2);
    const auto m2 = d2.minima();
    CHECK(std::set<Partition>(m2.begin(), m2.end()) == std::set<Partition>{Partition{}, ones(2)});
    std::size_t total = 0;
    for (const auto& c : d2.chains) total += c.size();
    CHECK(total == 6);
    const auto d4 = scd_w2(4);
    const auto m4 = d4.minima();
    CHECK(std::set<Partition>(m4.begin(), m4.end()) ==
          std::set<Partition>{Partition{}, ones(2), ones(4)});
  }

  TEST_CASE("labels alternate 1,2 and closed forms hold") {
    for (int h = 0; h <= 10; ++h) {
      const auto d = scd_w2(h);
      CHECK(is_scd(d));
      CHECK(certify(d).all_passed());
      for (const auto& labels : d.edge_labels())
        for (std::size_t i = 0; i < labels.size(); ++i) CHECK(labels[i] == (i % 2 == 0 ? 1 : 2));
      const auto mins = d.minima(), maxs = d.maxima();
      CHECK(std::set<Partition>(mins.begin(), mins.end()) == minima_closed_form(2, h));
      CHECK(std::set<Partition>(maxs.begin(), maxs.end()) == maxima_from_minima(2, h));
      CHECK(std::set<Partition>(maxs.begin(), maxs.end()) == maxima_by_complement(2, h));
      for (const auto& m : mins) CHECK((m == ones(m.length()) && m.length() % 2 == 0));
    }
  }
}

TEST_SUITE("width 3 operators") {
  TEST_CASE("highest and lowest weights") {
    for (int h = 0; h <= 12; ++h) {
      const BoxLattice box(3, h);
      for (const auto& lam : box.elements()) {
        if (!in_stratum_w3(lam, h)) continue;
        const bool hw = lam == ones(lam.length()) && lam.length() != 1;
        CHECK(e3(lam, h).has_value() == !hw);
        const int m2 = lam.multiplicity(2);
        const bool lw = (lam.multiplicity(1) == 0 && m2 % 2 == 0 && lam.length() == h) ||
                        (lam.multiplicity(1) == 1 && m2 % 2 == 1 && lam.length() == h && lam.multiplicity(3) > 0);
        CHECK(f3(lam, h).has_value() == !lw);
      }
    }
  }

  TEST_CASE("ends of each chain match the case statements") {
    for (int h = 0; h <= 12; ++h)
      for (const BoxLattice box(3, h); const auto& lam : box.elements()) {
        if (!in_stratum_w3(lam, h)) continue;
        CAPTURE(format_partition(lam));
        CAPTURE(h);
        const auto [hw, lw] = stated_ends_w3(lam, h);
        CHECK(walk(lam, h, e3).back() == hw);
        CHECK(walk(lam, h, f3).back() == lw);
      }
  }

  TEST_CASE("lowest weight reached from each highest weight") {
    for (int h = 2; h <= 12; ++h)
      for (int m1 = 0; m1 <= h; ++m1) {
        if (m1 == 1) continue;
        const Partition expected =
            m1 % 2 == 0 ? P({{3, h - m1}, {2, m1}}) : P({{3, h - m1 + 1}, {2, m1 - 2}, {1, 1}});
        CHECK(walk(ones(m1), h, f3).back() == expected);
      }
  }

  TEST_CASE("partial inverses, column labels and stratum closure") {
    for (int h = 0; h <= 12; ++h)
      for (const BoxLattice box(3, h); const auto& lam : box.elements()) {
        if (!in_stratum_w3(lam, h)) {
          CHECK_THROWS_AS(f3(lam, h), ValidationError);
          continue;
        }
        if (auto s = f3(lam, h)) {
          CHECK(added_column(lam, s->target) == s->column);
          auto back = e3(s->target, h);
          REQUIRE(back.has_value());
          CHECK(back->target == lam);
          CHECK(back->column == s->column);
        }
        if (auto s = e3(lam, h)) {
          CHECK(added_column(s->target, lam) == s->column);
          auto fwd = f3(s->target, h);
          REQUIRE(fwd.has_value());
          CHECK(fwd->target == lam);
        }
        const auto op = classify_w3(lam, h, Direction::f);
        CHECK((op.phase == 1 || op.phase == 2));
        CHECK(std::stoi(op.case_id) >= 1);
        CHECK(std::stoi(op.case_id) <= 8);
      }
  }

  TEST_CASE("late labels cycle 123 or 321") {
    for (int h = 4; h <= 12; ++h)
      for (int m1 = 0; m1 <= h; ++m1) {
        if (m1 == 1) continue;
        ChainDecomposition d{3, h, {walk(ones(m1), h, f3)}};
        const auto labels = d.edge_labels()[0];
        CHECK(matches_pattern(labels, 3));
      }
  }

  TEST_CASE("strata partition") {
    for (int h = 0; h <= 12; ++h) {
      std::set<Partition> inner, shifted;
      for (const BoxLattice box(3, h); const auto& lam : box.elements())
        if (in_stratum_w3(lam, h)) inner.insert(lam);
      if (h >= 4)
        for (const BoxLattice box(3, h - 4); const auto& mu : box.elements()) shifted.insert(oplus(mu, Partition{3, 1, 1, 1}));
      std::set<Partition> all;
      for (const BoxLattice box(3, h); const auto& lam : box.elements()) all.insert(lam);
      std::set<Partition> both;
      std::set_intersection(inner.begin(), inner.end(), shifted.begin(), shifted.end(), std::inserter(both, both.end()));
      CHECK(both.empty());
      std::set<Partition> uni(inner);
      uni.insert(shifted.begin(), shifted.end());
      CHECK(uni == all);
    }
  }
}

TEST_SUITE("width 4 operators") {
  TEST_CASE("highest weights") {
    for (int h = 0; h <= 12; ++h)
      for (const BoxLattice box(4, h); const auto& lam : box.elements()) {
        if (!in_stratum_w4(lam, h)) continue;
        const bool hw = lam == ones(lam.length()) && lam.length() != 1;
        CHECK(e4(lam, h).has_value() == !hw);
      }
    for (int h = 2; h <= 12; ++h)
      for (int m1 = 0; m1 <= h; ++m1) {
        if (m1 == 1) continue;
        const Partition expected =
            m1 % 2 == 0 ? P({{4, h - m1}, {3, m1}}) : P({{4, h - m1 + 1}, {3, m1 - 2}, {2, 1}});
        CHECK(walk(ones(m1), h, f4).back() == expected);
      }
  }

  TEST_CASE("chain from the empty partition in L''(4,3)") {
    const auto chain = walk(Partition{}, 3, f4);
    CHECK(chain.size() == 13);
    CHECK(chain.back() == Partition{4, 4, 4});
  }

  TEST_CASE("ends of each chain match the case statements") {
    for (int h = 0; h <= 12; ++h)
      for (const BoxLattice box(4, h); const auto& lam : box.elements()) {
        if (!in_stratum_w4(lam, h)) continue;
        CAPTURE(format_partition(lam));
        CAPTURE(h);
        const auto [hw, lw] = stated_ends_w4(lam, h);
        CHECK(walk(lam, h, e4).back() == hw);
        CHECK(walk(lam, h, f4).back() == lw);
      }
  }

  TEST_CASE("partial inverses and phase side conditions") {
    for (int h = 0; h <= 12; ++h)
      for (const BoxLattice box(4, h); const auto& lam : box.elements()) {
        if (!in_stratum_w4(lam, h)) {
          CHECK_THROWS_AS(e4(lam, h), ValidationError);
          continue;
        }
        const auto op = classify_w4(lam, h, Direction::f);
        const int m1 = lam.multiplicity(1), m4 = lam.multiplicity(4);
        if (auto s = f4(lam, h)) {
          CHECK(added_column(lam, s->target) == s->column);
          auto back = e4(s->target, h);
          REQUIRE(back.has_value());
          CHECK(back->target == lam);
          if ((op.case_id == "1b" && m1 == 0) || (op.case_id == "2a" && m1 == 2))
            CHECK(classify_w4(s->target, h, Direction::f).phase == 2);
        }
        if (auto s = e4(lam, h)) {
          CHECK(added_column(s->target, lam) == s->column);
          auto fwd = f4(s->target, h);
          REQUIRE(fwd.has_value());
          CHECK(fwd->target == lam);
          if ((op.case_id == "3" || op.case_id == "7") && m4 == 0)
            CHECK(classify_w4(s->target, h, Direction::f).phase == 1);
        }
      }
  }

  TEST_CASE("late labels cycle 1234 or 4321") {
    for (int h = 4; h <= 12; ++h)
      for (int m1 = 0; m1 <= h; ++m1) {
        if (m1 == 1) continue;
        ChainDecomposition d{4, h, {walk(ones(m1), h, f4)}};
        CHECK(matches_pattern(d.edge_labels()[0], 4));
      }
  }

  TEST_CASE("strata partition") {
    for (int h = 0; h <= 12; ++h) {
      std::multiset<Partition> pieces;
      for (const BoxLattice box(4, h); const auto& lam : box.elements())
        if (in_stratum_w4(lam, h)) pieces.insert(lam);
      if (h >= 2)
        for (const BoxLattice box(4, h - 2); const auto& mu : box.elements())
          if (in_prime_stratum_w4(mu, h - 2)) pieces.insert(oplus(mu, Partition{2, 2}));
      if (h >= 3)
        for (const BoxLattice box(4, h - 3); const auto& mu : box.elements()) pieces.insert(oplus(mu, Partition{4, 1, 1}));
      const auto all = BoxLattice(4, h).elements();
      CHECK(pieces == std::multiset<Partition>(all.begin(), all.end()));
    }
  }
}

TEST_SUITE("decompositions") {
  TEST_CASE("width 3 certified with the stated extremal elements") {
    for (int h = 0; h <= 12; ++h) {
      CAPTURE(h);
      const auto d = scd_w3(h);
      CHECK(is_scd(d));
      const auto report = certify(d);
      CHECK_MESSAGE(report.all_passed(), report.to_text());
      const auto mins = d.minima();
      CHECK(std::set<Partition>(mins.begin(), mins.end()) == oracle::minima_w3(h));
      CHECK(minima_closed_form(3, h) == oracle::minima_w3(h));
      const auto pairs = oracle::maxima_w3(h);
      std::set<Partition> stated;
      for (const auto& c : d.chains) {
        REQUIRE(pairs.count(c.front()) == 1);
        CHECK(pairs.at(c.front()) == c.back());
        stated.insert(c.back());
      }
      CHECK(maxima_from_minima(3, h) == stated);
      CHECK(maxima_by_complement(3, h) == stated);
      CHECK(oracle::maxima_by_complement(3, h) == stated);
      const int center = (3 * h + 1) / 2;
      for (const auto& c : d.chains) CHECK(c.front().size() <= center);
      for (const auto& c : d.chains) CHECK(c.back().size() >= center);
    }
  }

  TEST_CASE("width 4 certified with the stated extremal elements") {
    for (int h = 0; h <= 10; ++h) {
      CAPTURE(h);
      const auto d = scd_w4(h);
      CHECK(is_scd(d));
      const auto report = certify(d);
      CHECK_MESSAGE(report.all_passed(), report.to_text());
      const auto mins = d.minima();
      CHECK(std::set<Partition>(mins.begin(), mins.end()) == oracle::minima_w4(h));
      CHECK(minima_closed_form(4, h) == oracle::minima_w4(h));
      const auto pairs = oracle::maxima_w4(h);
      std::set<Partition> stated;
      for (const auto& c : d.chains) {
        REQUIRE(pairs.count(c.front()) == 1);
        CHECK(pairs.at(c.front()) == c.back());
        stated.insert(c.back());
      }
      CHECK(maxima_from_minima(4, h) == stated);
      CHECK(maxima_by_complement(4, h) == stated);
      CHECK(oracle::maxima_by_complement(4, h) == stated);
    }
  }

  TEST_CASE("the top element refutes equality-if-even for width 4") {
    for (int h = 1; h <= 8; ++h) {
      const auto d = scd_w4(h);
      const Partition top = P({{4, h}});
      bool is_max = false;
      for (const auto& c : d.chains) is_max = is_max || c.back() == top;
      CHECK(is_max);
      CHECK(BoxLattice(4, h).complement(top).empty());
    }
  }

  TEST_CASE("primed width 4 decomposition covers L'(4,h)") {
    for (int h = 0; h <= 10; ++h) {
      const auto d = scd_prime_w4(h);
      std::multiset<Partition> seen;
      for (const auto& c : d.chains) {
        seen.insert(c.begin(), c.end());
        CHECK(c.front().size() + c.back().size() == 4 * h);
      }
      std::multiset<Partition> expected;
      for (const BoxLattice box(4, h); const auto& lam : box.elements())
        if (in_prime_stratum_w4(lam, h)) expected.insert(lam);
      CHECK(seen == expected);
    }
  }

  TEST_CASE("chain counts equal the middle rank size") {
    for (int w = 2; w <= 4; ++w)
      for (int h = 0; h <= 8; ++h) {
        const auto groups = BoxLattice(w, h).elements_by_rank();
        CHECK(build_scd(w, h).chains.size() == groups[w * h / 2].size());
      }
  }

  TEST_CASE("golden decompositions") {
    for (const auto& [name, w, h] : std::vector<std::tuple<std::string, int, int>>{
             {"L3x3.json", 3, 3}, {"L3x10.json", 3, 10}, {"L4x3.json", 4, 3}, {"L4x7.json", 4, 7}}) {
      CAPTURE(name);
      const auto g = golden(name);
      CHECK(g.w == w);
      CHECK(g.h == h);
      CHECK(oracle::chain_set(g) == oracle::chain_set(build_scd(w, h)));
    }
    CHECK(golden("L3x3.json").chains.size() == 3);
    CHECK(golden("L3x10.json").chains.size() == 18);
  }

  TEST_CASE("negative controls") {
    auto d = scd_w3(4);
    d.canonicalize();
    REQUIRE(d.chains.size() >= 2);
    auto swapped = d;
    auto& a = swapped.chains[0];
    auto& b = swapped.chains[1];
    const std::size_t cut = 2;
    std::vector<Partition> ta(a.begin() + cut, a.end()), tb(b.begin() + cut, b.end());
    a.resize(cut);
    b.resize(cut);
    a.insert(a.end(), tb.begin(), tb.end());
    b.insert(b.end(), ta.begin(), ta.end());
    const auto bad = certify(swapped);
    CHECK_FALSE(bad.all_passed());
    CHECK_FALSE((bad.check("cover").passed && bad.check("saturation").passed));
    CHECK_FALSE(is_scd(swapped));

    auto dropped = d;
    dropped.chains.pop_back();
    CHECK_FALSE(certify(dropped).check("cover").passed);

    auto cut_short = d;
    cut_short.chains[0].pop_back();
    cut_short.chains.push_back({d.chains[0].back()});
    CHECK_FALSE(certify(cut_short).check("rank-symmetry").passed);
  }

  TEST_CASE("pattern matcher") {
    CHECK(matches_pattern({1, 2, 3, 1, 2, 3, 1, 2, 3}, 3));
    CHECK(matches_pattern({2, 2, 1, 2, 3}, 3));
    CHECK(matches_pattern({2, 3, 2}, 3));
    CHECK(matches_pattern({}, 3));
    CHECK(matches_pattern({3, 2, 1, 3, 2, 1}, 3));
    CHECK_FALSE(matches_pattern({1, 2, 1, 2}, 3));
    CHECK_FALSE(matches_pattern({1, 3, 2, 1, 2, 3}, 3));
    CHECK_FALSE(matches_pattern({1, 1, 2}, 2));
    CHECK(matches_pattern({1, 2, 1, 2}, 2));
  }

  TEST_CASE("coefficients from minima") {
    CHECK(scd_coefficients(3, 3).coefficient(6, 3) == 1);
    for (int w = 2; w <= 4; ++w)
      for (int h = 1; h <= 6; ++h) CHECK(scd_coefficients(w, h).coefficient(w * h, 0) == 1);
    CHECK_THROWS_AS(scd_coefficients(5, 2), ValidationError);
    CHECK_THROWS_AS(build_scd(1, 2), ValidationError);
    CHECK_THROWS_AS(scd_w3(-1), ValidationError);
  }

  TEST_CASE("canonical order and JSON round trip") {
    auto d = scd_w4(5);
    d.canonicalize();
    for (std::size_t i = 1; i < d.chains.size(); ++i) {
      const auto& p = d.chains[i - 1].front();
      const auto& q = d.chains[i].front();
      CHECK((p.size() < q.size() || (p.size() == q.size() && p > q)));
    }
    const auto back = chains_from_json(chains_to_json(d));
    CHECK(back.w == d.w);
    CHECK(back.h == d.h);
    CHECK(back.chains == d.chains);
  }
}
