#include "qsym/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "qsym/errors.hpp"
#include "qsym/text_io.hpp"

namespace qsym {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<int> int_list(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ValidationError("expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string symfunc_to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [index, c] : f.terms()) terms.push_back({{"index", index}, {"coeff", to_decimal(c)}});
  json j = {{"degree", f.degree()}, {"basis", std::string(basis_name(f.basis()))}, {"terms", terms}};
  return j.dump(2) + "\n";
}

SymFunc symfunc_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  try {
    SymFunc f(j.at("degree").get<int>(), parse_basis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms")) {
      const json& c = term.at("coeff");
      BigInt coeff = c.is_string() ? parse_decimal(c.get<std::string>()) : BigInt(c.get<long long>());
      f.add_term(int_list(term.at("index")), coeff);
    }
    return f;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed symmetric function: ") + e.what());
  }
}

std::string two_row_to_json(int w, int h, const TwoRowPoly& p) {
  json terms = json::array();
  for (const auto& [a, c] : p.terms())
    terms.push_back({{"index", {a, p.degree() - a}}, {"coeff", to_decimal(c)}});
  return json{{"w", w}, {"h", h}, {"terms", terms}}.dump(2) + "\n";
}

std::string chains_to_json(const ChainDecomposition& d) {
  json chains = json::array();
  const auto labels = d.edge_labels();
  for (std::size_t i = 0; i < d.chains.size(); ++i) {
    json elements = json::array();
    for (const auto& p : d.chains[i]) elements.push_back(p.parts());
    chains.push_back({{"elements", elements}, {"labels", labels[i]}});
  }
  return json{{"w", d.w}, {"h", d.h}, {"chains", chains}}.dump() + "\n";
}

ChainDecomposition chains_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  try {
    ChainDecomposition d{j.at("w").get<int>(), j.at("h").get<int>(), {}};
    for (const auto& chain : j.at("chains")) {
      std::vector<Partition> elements;
      for (const auto& e : chain.at("elements")) elements.emplace_back(int_list(e));
      d.chains.push_back(std::move(elements));
    }
    return d;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed chain file: ") + e.what());
  }
}

std::string matrix_to_csv(const PartitionMatrix& m) {
  auto label = [](const Partition& p) { return "\"" + format_partition(p) + "\""; };
  std::ostringstream out;
  out << "\"\"";
  for (const auto& p : m.index()) out << ',' << label(p);
  out << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << label(m.index()[i]);
    for (std::size_t j = 0; j < m.dim(); ++j) out << ',' << to_decimal(m(i, j));
    out << '\n';
  }
  return out.str();
}

}  // namespace qsym
