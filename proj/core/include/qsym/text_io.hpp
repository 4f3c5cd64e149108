#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsym/partition.hpp"
#include "qsym/symfunc.hpp"
#include "qsym/tableau.hpp"

namespace qsym {

// Bracketed forms: partitions and compositions as [4,2,1] (empty: []),
// tableaux as rows bottom to top separated by ';', e.g. [1,1,2,3;2,3;4].

std::string format_parts(const std::vector<int>& parts);
std::vector<int> parse_parts(std::string_view text);

std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);

std::string format_composition(const Composition& c);
Composition parse_composition(std::string_view text);

std::string format_tableau(const Tableau& t);
Tableau parse_tableau(std::string_view text);

/// Human-readable sum such as "s[3,2] + s[4,1]" or "-2*F[2,1]"; "0" if zero.
std::string format_symfunc(const SymFunc& f);

}  // namespace qsym
