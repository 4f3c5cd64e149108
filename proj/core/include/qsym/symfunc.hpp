#pragma once

#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include "qsym/bigint.hpp"
#include "qsym/partition.hpp"

namespace qsym {

enum class Basis { F, M, s };

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view text);

/// Homogeneous element of QSym (F or M basis) or Sym (Schur basis) with
/// exact integer coefficients. Indices are compositions for F/M and
/// partitions for s, all of size degree(). Zero coefficients are never
/// stored. Terms iterate in reverse lexicographic order of the index.
class SymFunc {
 public:
  using Index = std::vector<int>;
  using Terms = std::map<Index, BigInt, std::greater<>>;

  SymFunc(int degree, Basis basis);

  /// Single basis element with coefficient 1.
  static SymFunc basis_element(Basis basis, const Composition& index);
  static SymFunc schur(const Partition& lam);

  int degree() const noexcept { return degree_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const Index& index) const;
  /// Adds c to the coefficient of index, validating the index.
  void add_term(const Index& index, const BigInt& c);

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const BigInt& scalar);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const BigInt& c, SymFunc a) { return a *= c; }
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  void require_compatible(const SymFunc& other) const;
  void validate(const Index& index) const;

  int degree_;
  Basis basis_;
  Terms terms_;
};

}  // namespace qsym
