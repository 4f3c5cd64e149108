#pragma once

#include <string>

#include "qsym/quasi_kostka.hpp"
#include "qsym/scd.hpp"
#include "qsym/symfunc.hpp"
#include "qsym/two_variable.hpp"

namespace qsym {

// {"degree": n, "basis": "F", "terms": [{"index": [...], "coeff": "<decimal>"}]}
// with terms in reverse-lex order of the index.
std::string symfunc_to_json(const SymFunc& f);
/// Throws ValidationError on malformed input.
SymFunc symfunc_from_json(const std::string& text);

// {"w": w, "h": h, "terms": [{"index": [a,b], "coeff": "<decimal>"}]}, a descending.
std::string two_row_to_json(int w, int h, const TwoRowPoly& p);

// {"w": w, "h": h, "chains": [{"elements": [[...], ...], "labels": [...]}]}
std::string chains_to_json(const ChainDecomposition& d);
ChainDecomposition chains_from_json(const std::string& text);

/// First row and column hold the partition labels, entries in decimal.
std::string matrix_to_csv(const PartitionMatrix& m);

}  // namespace qsym
