#include "qsym/two_variable.hpp"

#include <string>

#include "qsym/box_lattice.hpp"
#include "qsym/errors.hpp"
#include "qsym/quasi_kostka.hpp"
#include "qsym/scd.hpp"

namespace qsym {

TwoRowPoly::TwoRowPoly(int degree) : degree_(degree) {
  if (degree < 0) throw ValidationError("negative degree");
}

BigInt TwoRowPoly::coefficient(int a, int b) const {
  if (a + b != degree_) return 0;
  auto it = terms_.find(a);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TwoRowPoly::add(int a, int b, const BigInt& c) {
  if (a + b != degree_ || b < 0 || a < b) throw ValidationError("not a two-row index of the right degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc TwoRowPoly::to_symfunc() const {
  SymFunc out(degree_, Basis::s);
  for (const auto& [a, c] : terms_) out.add_term(Partition({a, degree_ - a}).parts(), c);
  return out;
}

TwoRowPoly TwoRowPoly::from_symfunc(const SymFunc& f) {
  if (f.basis() != Basis::s) throw ValidationError("expected a Schur-basis value");
  TwoRowPoly out(f.degree());
  for (const auto& [index, c] : f.terms()) {
    if (index.size() > 2) throw ValidationError("term with more than two rows");
    const Partition p(index);
    out.add(p[0], p[1], c);
  }
  return out;
}

bool BivariatePoly::is_symmetric() const {
  for (int a = 0; a <= degree_; ++a)
    if (coeff_[a] != coeff_[degree_ - a]) return false;
  return true;
}

BivariatePoly BivariatePoly::schur(int a, int b) {
  BivariatePoly p(a + b);
  for (int i = b; i <= a; ++i) p.coeff(i) = 1;
  return p;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  if (other.degree_ != degree_) throw ValidationError("degree mismatch");
  for (int a = 0; a <= degree_; ++a) coeff_[a] += other.coeff_[a];
  return *this;
}

TwoRowPoly schur_two_rows(const BivariatePoly& p) {
  if (!p.is_symmetric()) throw ValidationError("polynomial is not symmetric in x and y");
  const int d = p.degree();
  TwoRowPoly out(d);
  for (int b = 0; 2 * b <= d; ++b) {
    const int a = d - b;
    BigInt c = p.coeff(a);
    if (b > 0) c -= p.coeff(a + 1);
    out.add(a, b, c);
  }
  if (evaluate_two_rows(out) != p) throw CrossCheckError("two-row decomposition does not reconstruct");
  return out;
}

BivariatePoly evaluate_two_rows(const TwoRowPoly& f) {
  BivariatePoly p(f.degree());
  for (const auto& [a, c] : f.terms()) p += c * BivariatePoly::schur(a, f.degree() - a);
  return p;
}

long long two_var_c(int lam2, int w, int h) {
  if (lam2 < 0 || w < 0 || h < 0) return 0;
  long long count = 0;
  for (const auto& mu : partitions_of(lam2, h, w)) {
    bool excluded = true;  // (w^k, a): every part but the last equals w
    for (int i = 0; i + 1 < mu.length(); ++i)
      if (mu[i] != w) excluded = false;
    if (!excluded) ++count;
  }
  return count;
}

std::string_view method_name(TwoVarMethod m) {
  switch (m) {
    case TwoVarMethod::formula: return "formula";
    case TwoVarMethod::scd: return "scd";
    case TwoVarMethod::oracle: return "oracle";
  }
  return "?";
}

TwoVarMethod parse_method(std::string_view text) {
  if (text == "formula") return TwoVarMethod::formula;
  if (text == "scd") return TwoVarMethod::scd;
  if (text == "oracle") return TwoVarMethod::oracle;
  throw ValidationError("unknown method '" + std::string(text) + "'");
}

BivariatePoly complete_at_monomials(int w, int h) {
  // table[t][s]: multisets of size t from the monomials seen so far with
  // total y-exponent s.
  const int d = w * h;
  std::vector<std::vector<BigInt>> table(w + 1, std::vector<BigInt>(d + 1));
  table[0][0] = 1;
  for (int j = 0; j <= h; ++j)
    for (int t = 1; t <= w; ++t)
      for (int s = j; s <= d; ++s)
        if (table[t - 1][s - j] != 0) table[t][s] += table[t - 1][s - j];
  BivariatePoly p(d);
  for (int s = 0; s <= d; ++s) p.coeff(d - s) = table[w][s];
  return p;
}

namespace {

TwoRowPoly via_formula(int w, int h) {
  const int d = w * h;
  const auto inv = inverse_quasi_kostka(d, 2);
  const auto& idx = inv->index();
  std::vector<BigInt> c(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    c[i] = idx[i].length() <= 1 ? BigInt(1) : BigInt(two_var_c(idx[i][1], w, h));
  TwoRowPoly out(d);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    BigInt b = 0;
    for (std::size_t i = 0; i <= j; ++i) b += (*inv)(i, j) * c[i];
    out.add(idx[j][0], idx[j][1], b);
  }
  return out;
}

}  // namespace

TwoRowPoly two_var_plethysm(int w, int h, TwoVarMethod method) {
  if (w < 1 || h < 1) throw ValidationError("two-variable plethysm needs w >= 1 and h >= 1");
  switch (method) {
    case TwoVarMethod::formula: return via_formula(w, h);
    case TwoVarMethod::oracle: return schur_two_rows(complete_at_monomials(w, h));
    case TwoVarMethod::scd: return scd_coefficients(w, h);
  }
  throw ValidationError("unknown method");
}

SymFunc truncate_two_rows(const SymFunc& f) {
  if (f.basis() != Basis::s) throw ValidationError("expected a Schur-basis value");
  SymFunc out(f.degree(), Basis::s);
  for (const auto& [index, c] : f.terms())
    if (index.size() <= 2) out.add_term(index, c);
  return out;
}

SymFunc shift_add(const Partition& a, const SymFunc& f) {
  if (f.basis() != Basis::s) throw ValidationError("expected a Schur-basis value");
  SymFunc out(f.degree() + a.size(), Basis::s);
  for (const auto& [index, c] : f.terms()) out.add_term(componentwise_sum(a, Partition(index)).parts(), c);
  return out;
}

}  // namespace qsym
