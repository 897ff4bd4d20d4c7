#include "cesaro/format.hpp"

#include <charconv>
#include <system_error>

namespace cesaro {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_u64(std::uint64_t x) {
  char buf[24];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_i64(std::int64_t x) {
  char buf[24];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_bigint(const BigInt& x) { return x.str(); }

}  // namespace cesaro
