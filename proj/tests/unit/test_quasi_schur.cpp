#include <doctest.h>
#include <oracle.hpp>

using namespace qsym;

namespace {

void check_matches(const PartitionMatrix& q, const oracle::CsvMatrix& golden) {
  REQUIRE(q.dim() == golden.labels.size());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    CHECK(format_partition(q.index()[i]) == golden.labels[i]);
    for (std::size_t j = 0; j < q.dim(); ++j) CHECK(q(i, j) == golden.rows[i][j]);
  }
  CHECK(oracle::matches(q, golden));
}

SymFunc load(const std::string& name) { return symfunc_from_json(oracle::read_file(oracle::data_path(name))); }

SymFunc f_from_schur(const SymFunc& g) {
  SymFunc f(g.degree(), Basis::F);
  for (const auto& [lam, c] : g.terms())
    for (const auto& [alpha, count] : oracle::schur_F(lam)) f.add_term(alpha, c * count);
  return f;
}

bool strictly_dominated(const Partition& lo, const Partition& hi) { return lo != hi && dominance_leq(lo, hi); }

Partition hook(int n, int k) {
  std::vector<int> p{n - k};
  p.insert(p.end(), k, 1);
  return Partition(p);
}

}  // namespace

TEST_SUITE("symfunc") {
  TEST_CASE("terms, zero dropping and validation") {
    SymFunc f(3, Basis::F);
    f.add_term({2, 1}, 3);
    f.add_term({1, 2}, 1);
    f.add_term({2, 1}, -3);
    CHECK(f.terms().size() == 1);
    CHECK(f.coefficient({1, 2}) == 1);
    CHECK(f.coefficient({3}) == 0);
    CHECK_THROWS_AS(f.add_term({2, 2}, 1), ValidationError);
    CHECK_THROWS_AS(f.add_term({2, 0, 1}, 1), ValidationError);
    SymFunc s(3, Basis::s);
    CHECK_THROWS_AS(s.add_term({1, 2}, 1), ValidationError);
  }

  TEST_CASE("arithmetic refuses to mix bases or degrees") {
    const SymFunc a = SymFunc::schur(Partition{2, 1});
    const SymFunc b = SymFunc::basis_element(Basis::F, Composition{2, 1});
    const SymFunc c = SymFunc::schur(Partition{2});
    CHECK_THROWS_AS(a + b, ValidationError);
    CHECK_THROWS_AS(a - c, ValidationError);
    const SymFunc twice = a + a;
    CHECK(twice.coefficient({2, 1}) == 2);
    CHECK((BigInt(2) * a) == twice);
    CHECK((twice - a) == a);
    CHECK((BigInt(0) * a).is_zero());
  }

  TEST_CASE("terms iterate in reverse lexicographic order") {
    SymFunc f(4, Basis::F);
    for (const auto& c : compositions_of(4)) f.add_term(c.parts(), 1);
    std::vector<std::vector<int>> keys;
    for (const auto& [k, v] : f.terms()) keys.push_back(k);
    CHECK(std::is_sorted(keys.begin(), keys.end(), std::greater<>()));
  }

  TEST_CASE("basis names") {
    CHECK(parse_basis("F") == Basis::F);
    CHECK(parse_basis("s") == Basis::s);
    CHECK(basis_name(Basis::M) == "M");
    CHECK_THROWS_AS(parse_basis("x"), ValidationError);
  }
}

TEST_SUITE("quasi-kostka matrix") {
  TEST_CASE("n=7 matches the transcribed matrix") {
    const auto q = quasi_kostka_matrix(7);
    check_matches(q, oracle::read_csv("qk7.csv"));
    CHECK(q.at(Partition{4, 2, 1}, Partition{2, 2, 2, 1}) == 2);
    CHECK(q.at(Partition{4, 2, 1}, Partition{3, 2, 2}) == 2);
  }

  TEST_CASE("n=7 inverse matches the transcribed matrix") {
    const auto inv = inverse_quasi_kostka(7);
    check_matches(*inv, oracle::read_csv("qk7_inverse.csv"));
    CHECK(inv->at(Partition{6, 1}, Partition{2, 2, 2, 1}) == 2);
    CHECK(inv->at(Partition{5, 2}, Partition{2, 2, 2, 1}) == -3);
    CHECK(inv->max_abs_entry() == 4);
  }

  TEST_CASE("entries agree with the SYT-descent oracle") {
    for (int n = 1; n <= 7; ++n) {
      const auto q = quasi_kostka_matrix(n);
      for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j)
          CHECK(q(i, j) == oracle::quasi_kostka(q.index()[i].parts(), q.index()[j].parts()));
    }
  }

  TEST_CASE("small cases") {
    const auto one = quasi_kostka_matrix(1);
    CHECK(one.dim() == 1);
    CHECK(one.is_identity());
    const auto two_rows = quasi_kostka_matrix(8, 2);
    REQUIRE(two_rows.dim() == 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(two_rows(i, j) == (j == i || (i > 0 && j > i) ? 1 : 0));
    const auto inv = *inverse_quasi_kostka(8, 2);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(inv(i, j) == (j == i ? 1 : i > 0 && j == i + 1 ? -1 : 0));
  }

  TEST_CASE("inversion") {
    CHECK(invert_unitriangular(quasi_kostka_matrix(1)).is_identity());
    PartitionMatrix id(partitions_of(5));
    for (std::size_t i = 0; i < id.dim(); ++i) id(i, i) = 1;
    CHECK(invert_unitriangular(id) == id);
    PartitionMatrix bad = id;
    bad(2, 2) = 2;
    CHECK_THROWS_AS(invert_unitriangular(bad), ValidationError);
    PartitionMatrix lower = id;
    lower(3, 1) = 1;
    CHECK_THROWS_AS(invert_unitriangular(lower), ValidationError);
    for (int n = 1; n <= 10; ++n) {
      const auto q = quasi_kostka_matrix(n);
      const auto inv = inverse_quasi_kostka(n);
      CHECK(q.is_unit_upper_triangular());
      CHECK(inv->is_unit_upper_triangular());
      CHECK((q * *inv).is_identity());
      CHECK((*inv * q).is_identity());
    }
  }

  TEST_CASE("cache returns the same object") {
    CHECK(inverse_quasi_kostka(6).get() == inverse_quasi_kostka(6).get());
    CHECK(inverse_quasi_kostka(6, 3).get() != inverse_quasi_kostka(6).get());
  }

  TEST_CASE("dominance triangularity, hook sparsity and submatrix identity") {
    for (int n = 1; n <= 8; ++n) {
      const auto q = quasi_kostka_matrix(n);
      const auto inv = inverse_quasi_kostka(n);
      const auto& idx = q.index();
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) {
          if (q(i, j) != 0) CHECK(dominance_leq(idx[j], idx[i]));
          CHECK(q(i, j) >= 0);
          if (strictly_dominated(idx[i], idx[j])) CHECK((*inv)(i, j) == 0);
        }
      for (int k = 0; k < n; ++k) {
        const Partition hk = hook(n, k);
        for (const auto& mu : idx)
          if (mu != hk) CHECK(inv->at(mu, hk) == 0);
      }
      for (int m = 1; m <= n; ++m) {
        const auto restricted = quasi_kostka_matrix(n, m);
        CHECK(restricted == q.restrict_length(m));
        CHECK(*inverse_quasi_kostka(n, m) == inv->restrict_length(m));
        CHECK(invert_unitriangular(restricted) == inv->restrict_length(m));
      }
    }
  }
}

TEST_SUITE("signed chains") {
  TEST_CASE("the (4,1,1,1) to (2,2,2,1) example") {
    const auto chains = enumerate_chains(Partition{4, 1, 1, 1}, Partition{2, 2, 2, 1});
    REQUIRE(chains.size() == 3);
    std::multiset<int> signs;
    for (const auto& c : chains) signs.insert(c.sign());
    CHECK(signs == std::multiset<int>{-1, 1, 1});
  }

  TEST_CASE("trivial and worked examples") {
    for (const auto& lam : partitions_of(6)) {
      const auto chains = enumerate_chains(lam, lam);
      REQUIRE(chains.size() == 1);
      CHECK(chains[0].length() == 1);
      CHECK(chains[0].sign() == 1);
      CHECK(chains[0].tableaux[0] == superstandard(lam));
    }
    int sum = 0;
    for (const auto& c : enumerate_chains(Partition{3, 2}, Partition{2, 2, 1})) sum += c.sign();
    CHECK(sum == -1);
  }

  TEST_CASE("chains from (4,1) and (2,2,1)") {
    std::map<Partition, int> from41, from221;
    for (const auto& c : enumerate_chains_from(Partition{4, 1})) from41[c.weight()] += c.sign();
    for (const auto& c : enumerate_chains_from(Partition{2, 2, 1})) from221[c.weight()] += c.sign();
    CHECK(enumerate_chains_from(Partition{4, 1}).size() == 3);
    CHECK(from41 == std::map<Partition, int>{{Partition{2, 2, 1}, 1}, {Partition{3, 2}, -1}, {Partition{4, 1}, 1}});
    CHECK(enumerate_chains_from(Partition{2, 2, 1}).size() == 1);
    CHECK(from221 == std::map<Partition, int>{{Partition{2, 2, 1}, 1}});
  }

  TEST_CASE("chain structure and signed sums, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      const auto inv = inverse_quasi_kostka(n);
      for (const auto& mu : partitions_of(n))
        for (const auto& lam : partitions_of(n)) {
          int sum = 0;
          for (const auto& c : enumerate_chains(mu, lam)) {
            CHECK(c.start() == mu);
            CHECK(c.weight() == lam);
            for (std::size_t i = 0; i < c.tableaux.size(); ++i) {
              CHECK(oracle::quasi_yamanouchi(c.tableaux[i].rows()));
              if (i > 0) CHECK(c.tableaux[i].shape().parts() == oracle::weight_of(c.tableaux[i - 1].rows()));
            }
            CHECK(oracle::weight_of(c.tableaux.back().rows()) == lam.parts());
            sum += c.sign();
          }
          CHECK(inv->at(mu, lam) == sum);
        }
    }
  }
}

TEST_SUITE("conversion") {
  TEST_CASE("schur_to_F examples") {
    CHECK(schur_to_F(Partition{5}) == SymFunc::basis_element(Basis::F, Composition{5}));
    SymFunc s21(3, Basis::F);
    s21.add_term({1, 2}, 1);
    s21.add_term({2, 1}, 1);
    CHECK(schur_to_F(Partition{2, 1}) == s21);
    CHECK(schur_to_F(Partition{4, 2, 1}).coefficient({2, 2, 2, 1}) == 2);
    CHECK(schur_to_F(Partition{5, 2}) == load("schur_52_F.json"));
  }

  TEST_CASE("schur_to_F agrees with the SYT oracle and leads with F_lam") {
    for (int n = 1; n <= 8; ++n)
      for (const auto& lam : partitions_of(n)) {
        const SymFunc f = schur_to_F(lam);
        CHECK(f == f_from_schur(SymFunc::schur(lam)));
        REQUIRE_FALSE(f.is_zero());
        CHECK(f.terms().begin()->first == lam.parts());
        CHECK(f.terms().begin()->second == 1);
      }
  }

  TEST_CASE("bounded schur_to_F keeps indices of length at most m") {
    for (int n = 1; n <= 7; ++n)
      for (const auto& lam : partitions_of(n))
        for (int m = 1; m <= n; ++m) {
          SymFunc expected(n, Basis::F);
          for (const SymFunc full = schur_to_F(lam); const auto& [alpha, c] : full.terms())
            if (static_cast<int>(alpha.size()) <= m) expected.add_term(alpha, c);
          CHECK(schur_to_F(lam, m) == expected);
        }
  }

  TEST_CASE("F_to_M examples") {
    const SymFunc m4 = F_to_M(SymFunc::basis_element(Basis::F, Composition{4}));
    CHECK(m4.basis() == Basis::M);
    CHECK(m4.terms().size() == 8);
    for (const auto& [k, c] : m4.terms()) CHECK(c == 1);
    SymFunc m11(2, Basis::M);
    m11.add_term({1, 1}, 1);
    CHECK(F_to_M(SymFunc::basis_element(Basis::F, Composition{1, 1})) == m11);
    SymFunc m21(3, Basis::M);
    m21.add_term({2, 1}, 1);
    m21.add_term({1, 1, 1}, 1);
    CHECK(F_to_M(SymFunc::basis_element(Basis::F, Composition{2, 1})) == m21);
  }

  TEST_CASE("F_to_M agrees with the partial-sum definition") {
    auto partial_sums = [](const std::vector<int>& c) {
      std::set<int> s;
      int acc = 0;
      for (int v : c) s.insert(acc += v);
      return s;
    };
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int n = 1; n <= 7; ++n) {
      SymFunc f(n, Basis::F);
      for (const auto& c : oracle::compositions(n)) f.add_term(c, coeff(rng));
      const SymFunc m = F_to_M(f);
      for (const auto& beta : oracle::compositions(n)) {
        BigInt expected = 0;
        const auto sb = partial_sums(beta);
        for (const auto& [alpha, c] : f.terms()) {
          const auto sa = partial_sums(alpha);
          if (std::includes(sb.begin(), sb.end(), sa.begin(), sa.end())) expected += c;
        }
        CHECK(m.coefficient(beta) == expected);
      }
    }
  }

  TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(load("f_example.json")));
    CHECK_FALSE(is_symmetric(load("f_asymmetric.json")));
    for (int n = 1; n <= 7; ++n)
      for (const auto& lam : partitions_of(n)) CHECK(is_symmetric(schur_to_F(lam)));
    CHECK(is_symmetric(SymFunc(4, Basis::F)));
    CHECK_THROWS_AS(is_symmetric(SymFunc(2, Basis::s)), ValidationError);
  }

  TEST_CASE("F_to_schur on the seven-term example") {
    const SymFunc f = load("f_example.json");
    SymFunc expected(5, Basis::s);
    expected.add_term({3, 2}, 1);
    expected.add_term({4, 1}, 1);
    CHECK(F_to_schur(f) == expected);
    CHECK(F_to_schur_via_chains(f) == expected);
  }

  TEST_CASE("F_to_schur refuses asymmetric input") {
    const SymFunc f = load("f_asymmetric.json");
    CHECK_THROWS_AS(F_to_schur(f), ValidationError);
    CHECK_THROWS_AS(F_to_schur_via_chains(f), ValidationError);
    SchurOptions skip;
    skip.skip_symmetry_check = true;
    CHECK_THROWS_AS(F_to_schur(f, skip), CrossCheckError);
    skip.verify_round_trip = false;
    CHECK(F_to_schur(f, skip) == SymFunc::schur(Partition{2, 1}));
  }

  TEST_CASE("schur_to_F inverts") {
    for (int n = 1; n <= 7; ++n)
      for (const auto& lam : partitions_of(n)) CHECK(F_to_schur(schur_to_F(lam)) == SymFunc::schur(lam));
  }

  TEST_CASE("random round trips and agreement of both routes") {
    std::mt19937 rng(20240601);
    for (int n = 1; n <= 8; ++n)
      for (int trial = 0; trial < 25; ++trial) {
        const SymFunc g = oracle::random_schur(n, rng);
        const SymFunc f = schur_expansion_to_F(g);
        CHECK(f == f_from_schur(g));
        CHECK(F_to_schur(f) == g);
        if (n <= 7) CHECK(F_to_schur_via_chains(f) == g);
      }
  }

  TEST_CASE("lex-largest support element carries the Schur coefficient") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 7; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        const SymFunc g = oracle::random_schur(n, rng);
        if (g.is_zero()) continue;
        const SymFunc f = schur_expansion_to_F(g);
        const auto& [nu, c] = *f.terms().begin();
        REQUIRE(oracle::is_partition(nu));
        CHECK(g.coefficient(nu) == c);
      }
  }

  TEST_CASE("max_len shortcut") {
    SymFunc g(6, Basis::s);
    g.add_term({4, 2}, 3);
    g.add_term({5, 1}, -2);
    g.add_term({3, 3}, 1);
    const SymFunc f = schur_expansion_to_F(g);
    SchurOptions two;
    two.max_len = 2;
    CHECK(F_to_schur(f, two) == g);
    g.add_term({2, 2, 2}, 1);
    CHECK_THROWS_AS(F_to_schur(schur_expansion_to_F(g), two), CrossCheckError);
  }
}
