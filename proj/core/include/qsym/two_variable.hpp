#pragma once

#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include "qsym/bigint.hpp"
#include "qsym/partition.hpp"
#include "qsym/symfunc.hpp"

namespace qsym {

/// Integer combination of two-row Schur functions s_{(a,b)}, a >= b >= 0,
/// a + b = degree. Keyed by the first row, largest first.
class TwoRowPoly {
 public:
  using Terms = std::map<int, BigInt, std::greater<>>;

  explicit TwoRowPoly(int degree = 0);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  BigInt coefficient(int a, int b) const;
  void add(int a, int b, const BigInt& c);

  SymFunc to_symfunc() const;
  /// Throws ValidationError if some term has more than two rows.
  static TwoRowPoly from_symfunc(const SymFunc& f);

  friend bool operator==(const TwoRowPoly&, const TwoRowPoly&) = default;

 private:
  int degree_;
  Terms terms_;
};

/// Homogeneous polynomial in x, y: coeff(a) multiplies x^a y^(degree - a).
class BivariatePoly {
 public:
  explicit BivariatePoly(int degree = 0) : degree_(degree), coeff_(degree + 1) {}

  int degree() const noexcept { return degree_; }
  const BigInt& coeff(int a) const { return coeff_.at(a); }
  BigInt& coeff(int a) { return coeff_.at(a); }
  bool is_symmetric() const;

  /// s_{(a,b)}(x, y) = (xy)^b (x^(a-b) + x^(a-b-1) y + ... + y^(a-b)).
  static BivariatePoly schur(int a, int b);

  BivariatePoly& operator+=(const BivariatePoly& other);
  friend BivariatePoly operator*(const BigInt& c, BivariatePoly p) {
    for (auto& v : p.coeff_) v *= c;
    return p;
  }
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  int degree_;
  std::vector<BigInt> coeff_;
};

/// Decomposes a symmetric homogeneous P into s_{(a,b)}(x,y):
/// coefficient [x^a y^b]P - [x^(a+1) y^(b-1)]P. Throws ValidationError if P is
/// not symmetric, CrossCheckError if reconstruction fails.
TwoRowPoly schur_two_rows(const BivariatePoly& p);
BivariatePoly evaluate_two_rows(const TwoRowPoly& f);

/// Number of mu |- lam2 in L(w,h) not of the form (w^k, a) with 0 <= a < w.
long long two_var_c(int lam2, int w, int h);

enum class TwoVarMethod { formula, scd, oracle };
std::string_view method_name(TwoVarMethod m);
TwoVarMethod parse_method(std::string_view text);

/// s_w[s_h](x, y) as a two-row Schur combination.
/// formula: c-vector times the inverse of the length-2 quasi-Kostka matrix.
/// scd:     minimal-element counts of the chain decomposition (w in 2..4).
/// oracle:  h_w evaluated at the monomials x^h, x^(h-1)y, ..., y^h.
TwoRowPoly two_var_plethysm(int w, int h, TwoVarMethod method);

/// h_w evaluated at x^h, x^(h-1) y, ..., y^h.
BivariatePoly complete_at_monomials(int w, int h);

/// Terms with at most two rows.
SymFunc truncate_two_rows(const SymFunc& f);
/// s_nu -> s_{a + nu} for every term (componentwise sum).
SymFunc shift_add(const Partition& a, const SymFunc& f);

}  // namespace qsym
