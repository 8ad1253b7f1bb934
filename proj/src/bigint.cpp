#include "sl2/bigint.hpp"

#include "sl2/error.hpp"

#include <limits>

namespace sl2 {

BigInt parse_decimal(const std::string& s) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) throw Error(ErrorCode::InvalidInput, "not a decimal integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw Error(ErrorCode::InvalidInput, "not a decimal integer: '" + s + "'");
    return BigInt(s);
}

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::OutOfRange, "integer " + x.str() + " exceeds 64 bits");
    return x.convert_to<std::int64_t>();
}

}  // namespace sl2
