#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cesaro {

// Finite list of positive integer parts (i_1, ..., i_l). Order is kept as
// given; every quantity derived from a signature is invariant under
// permutation of the parts, which the property tests exercise.
class Signature {
 public:
  // Throws std::invalid_argument when parts is empty or any part is 0.
  explicit Signature(std::vector<std::uint32_t> parts);

  // Parses a comma-separated list such as "1,2". Whitespace is not accepted.
  static Signature parse(std::string_view text);

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::uint32_t min_part() const;
  std::uint64_t sum_parts() const;

  // "1,2" form, used in logs and CSV summaries.
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::uint32_t> parts_;
};

}  // namespace cesaro
