#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sl2 {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt parse_decimal(const std::string& s);

// Throws OutOfRange if x does not fit.
std::int64_t to_int64(const BigInt& x);

}  // namespace sl2
