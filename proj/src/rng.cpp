#include "nshift/rng.hpp"

#include <stdexcept>

namespace nshift {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

BigInt Rng::between(const BigInt& lo, const BigInt& hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
  const BigInt span = hi - lo + 1;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(span)) + 1;
  const unsigned words = (bits + 63) / 64;
  for (;;) {
    BigInt x = 0;
    for (unsigned w = 0; w < words; ++w) {
      x <<= 64;
      x |= engine_();
    }
    // mask down to the bit length of span, then reject
    x &= (BigInt(1) << bits) - 1;
    if (x < span) return lo + x;
  }
}

}  // namespace nshift
