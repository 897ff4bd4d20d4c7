#include "cesaro/signature.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cesaro {

Signature::Signature(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("Signature: needs at least one part");
  }
  for (std::uint32_t p : parts_) {
    if (p == 0) {
      throw std::invalid_argument("Signature: parts must be positive");
    }
  }
}

Signature Signature::parse(std::string_view text) {
  std::vector<std::uint32_t> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("Signature: cannot parse part '" +
                                  std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Signature(std::move(parts));
}

std::uint32_t Signature::min_part() const {
  return *std::min_element(parts_.begin(), parts_.end());
}

std::uint64_t Signature::sum_parts() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string Signature::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

}  // namespace cesaro
