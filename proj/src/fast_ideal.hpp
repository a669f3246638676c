#pragma once

// Allocation-free ideal arithmetic for the finite rings, used on hot paths
// (path intersections, brute-force spline search). An ideal is a code: the
// element-set mask for W, the divisor of m for ZMod.

#include <cstdint>
#include <numeric>
#include <vector>

#include "udpkit/ring.hpp"

namespace udpkit::detail {

class FastIdeals {
 public:
  explicit FastIdeals(const Ring& ring) : ring_(ring), w_(ring.kind() == RingKind::W) {
    if (!ring.is_finite()) throw CapabilityError("fast ideal arithmetic needs a finite ring");
    modulus_ = w_ ? 8 : ring.modulus();
  }

  std::uint64_t code(const Ideal& ideal) const { return w_ ? ideal.w_mask() : ideal.zmod_divisor(); }

  Ideal ideal(std::uint64_t code) const {
    if (w_) {
      std::vector<Element> gens;
      for (unsigned e = 0; e < 8; ++e) {
        if (code & (1u << e)) gens.push_back(Element::from_index(ring_, e));
      }
      return Ideal::generated(ring_, std::move(gens));
    }
    return Ideal::principal(Element::from_index(ring_, code % modulus_));
  }

  std::uint64_t unit() const { return w_ ? 0xff : 1; }

  std::uint64_t sum(std::uint64_t a, std::uint64_t b) const {
    if (w_) {
      std::uint64_t out = 0;
      for (unsigned s = 0; s < 8; ++s) {
        if (a & (1u << s)) {
          for (unsigned t = 0; t < 8; ++t) {
            if (b & (1u << t)) out |= 1u << (s ^ t);
          }
        }
      }
      return out;
    }
    return std::gcd(a, b);
  }

  std::uint64_t meet(std::uint64_t a, std::uint64_t b) const {
    if (w_) return a & b;
    return a / std::gcd(a, b) * b;
  }

  bool member(std::uint64_t element, std::uint64_t code) const {
    return w_ ? ((code >> element) & 1u) != 0 : element % code == 0;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (w_) return a ^ b;
    const std::uint64_t s = a + b;
    return (s >= modulus_ || s < a) ? s - modulus_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    if (w_) return a ^ b;
    return a >= b ? a - b : a + (modulus_ - b);
  }

  std::uint64_t size() const { return modulus_; }

  std::vector<std::uint64_t> elements(std::uint64_t code) const {
    std::vector<std::uint64_t> out;
    if (w_) {
      for (unsigned e = 0; e < 8; ++e) {
        if (code & (1u << e)) out.push_back(e);
      }
    } else {
      for (std::uint64_t v = 0; v < modulus_; v += code) out.push_back(v);
    }
    return out;
  }

 private:
  Ring ring_;
  bool w_;
  std::uint64_t modulus_;
};

}  // namespace udpkit::detail
