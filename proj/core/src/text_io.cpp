#include "qsym/text_io.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view unbracket(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ValidationError("expected a bracketed list, got '" + std::string(text) + "'");
  return trim(text.substr(1, text.size() - 2));
}

std::vector<int> split_ints(std::string_view body, std::string_view whole) {
  std::vector<int> out;
  body = trim(body);
  if (body.empty()) return out;
  while (true) {
    const auto comma = body.find(',');
    const auto item = trim(body.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ValidationError("bad integer in '" + std::string(whole) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string format_parts(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ']';
}

std::vector<int> parse_parts(std::string_view text) { return split_ints(unbracket(text), text); }

std::string format_partition(const Partition& p) { return format_parts(p.parts()); }
Partition parse_partition(std::string_view text) { return Partition(parse_parts(text)); }

std::string format_composition(const Composition& c) { return format_parts(c.parts()); }
Composition parse_composition(std::string_view text) { return Composition(parse_parts(text)); }

std::string format_tableau(const Tableau& t) {
  std::string s = "[";
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(rows[r][c]);
    }
  }
  return s + ']';
}

Tableau parse_tableau(std::string_view text) {
  auto body = unbracket(text);
  std::vector<std::vector<int>> rows;
  if (body.empty()) return Tableau(rows);
  while (true) {
    const auto semi = body.find(';');
    rows.push_back(split_ints(body.substr(0, semi), text));
    if (semi == std::string_view::npos) break;
    body.remove_prefix(semi + 1);
  }
  return Tableau(std::move(rows));
}

std::string format_symfunc(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [index, c] : f.terms()) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1) s += to_decimal(mag) + "*";
    s += std::string(basis_name(f.basis())) + format_parts(index);
    first = false;
  }
  return s;
}

}  // namespace qsym
