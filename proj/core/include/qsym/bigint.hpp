#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsym {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(const std::string& text);

}  // namespace qsym
