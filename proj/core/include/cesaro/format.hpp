#pragma once

#include <cstdint>
#include <string>

#include "cesaro/numeric.hpp"

namespace cesaro {

// Shortest decimal string that parses back to exactly the same double
// (std::to_chars shortest form). Keeps CSV and JSON output byte-stable
// across runs and lossless across round trips.
std::string format_double(double x);

std::string format_u64(std::uint64_t x);
std::string format_i64(std::int64_t x);

// Decimal digits of an exact integer.
std::string format_bigint(const BigInt& x);

}  // namespace cesaro
