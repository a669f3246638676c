#pragma once

#include <cstdint>

namespace udpkit::detail {

// W = F2[x,y]/(x^2, xy, y^2); elements are bit triples (1 -> bit 0, x -> bit 1,
// y -> bit 2). Addition is xor.
inline std::uint8_t w_mul(std::uint8_t p, std::uint8_t q) {
  const unsigned a1 = p & 1u, b1 = (p >> 1) & 1u, c1 = (p >> 2) & 1u;
  const unsigned a2 = q & 1u, b2 = (q >> 1) & 1u, c2 = (q >> 2) & 1u;
  const unsigned a = a1 & a2;
  const unsigned b = (a1 & b2) ^ (a2 & b1);
  const unsigned c = (a1 & c2) ^ (a2 & c1);
  return static_cast<std::uint8_t>(a | (b << 1) | (c << 2));
}

}  // namespace udpkit::detail
