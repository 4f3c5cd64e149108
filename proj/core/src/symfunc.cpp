#include "qsym/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::F: return "F";
    case Basis::M: return "M";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  if (text == "F") return Basis::F;
  if (text == "M") return Basis::M;
  if (text == "s") return Basis::s;
  throw ValidationError("unknown basis '" + std::string(text) + "'");
}

BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw ValidationError("not a decimal integer: '" + text + "'");
  return BigInt(text);
}

SymFunc::SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0) throw ValidationError("negative degree");
}

SymFunc SymFunc::basis_element(Basis basis, const Composition& index) {
  SymFunc f(index.size(), basis);
  f.add_term(index.parts(), 1);
  return f;
}

SymFunc SymFunc::schur(const Partition& lam) {
  SymFunc f(lam.size(), Basis::s);
  f.add_term(lam.parts(), 1);
  return f;
}

BigInt SymFunc::coefficient(const Index& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SymFunc::validate(const Index& index) const {
  if (std::any_of(index.begin(), index.end(), [](int v) { return v <= 0; }))
    throw ValidationError("basis index has a nonpositive part");
  if (std::accumulate(index.begin(), index.end(), 0) != degree_)
    throw ValidationError("basis index size differs from degree " + std::to_string(degree_));
  if (basis_ == Basis::s && !std::is_sorted(index.begin(), index.end(), std::greater<>()))
    throw ValidationError("Schur index is not a partition");
}

void SymFunc::add_term(const Index& index, const BigInt& c) {
  validate(index);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymFunc::require_compatible(const SymFunc& other) const {
  if (basis_ != other.basis_) throw ValidationError("cannot combine values in different bases");
  if (degree_ != other.degree_) throw ValidationError("cannot combine values of different degrees");
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  require_compatible(other);
  for (const auto& [index, c] : other.terms_) add_term(index, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  require_compatible(other);
  for (const auto& [index, c] : other.terms_) add_term(index, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= scalar;
  return *this;
}

}  // namespace qsym
