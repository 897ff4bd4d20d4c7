#include "cesaro/numeric.hpp"

#include <cstddef>

namespace cesaro {

std::vector<BigInt> one_minus_product_poly(const std::vector<std::uint32_t>& parts) {
  // Expand prod_j (1 - t^{i_j}) by repeated shifted subtraction, then negate
  // and add 1. All coefficients stay exact integers.
  std::size_t degree = 0;
  for (std::uint32_t p : parts) degree += p;

  std::vector<BigInt> prod(degree + 1);
  prod[0] = 1;
  std::size_t cur_deg = 0;
  for (std::uint32_t p : parts) {
    // prod *= (1 - t^p), highest coefficients first so the update is in place.
    cur_deg += p;
    for (std::size_t k = cur_deg; k >= p; --k) {
      prod[k] -= prod[k - p];
      if (k == p) break;
    }
  }

  std::vector<BigInt> result(degree + 1);
  result[0] = 0;
  for (std::size_t k = 1; k <= degree; ++k) result[k] = -prod[k];
  return result;
}

}  // namespace cesaro
