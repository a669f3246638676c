#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udpkit/ring.hpp"

namespace udpkit {

enum class UdpStatus { Holds, Fails, Undecided };

std::string_view to_string(UdpStatus status);

/// A pair (u, w) and an element x of the u,w path intersection that no spline
/// realizes as rho(u) - rho(w). `certified` is true when unachievability was
/// established by exhaustive search; symbolic witnesses over infinite rings
/// rest on the violated pasting equality alone.
struct Witness {
  std::string u;
  std::string w;
  Element x;
  bool certified = true;
};

/// Rule names carried by verdicts.
namespace rules {
inline constexpr std::string_view kTree = "tree";
inline constexpr std::string_view kCycle = "cycle";
inline constexpr std::string_view kPedpp = "pedpp";
inline constexpr std::string_view kUnicyclic = "unicyclic-pasting";
inline constexpr std::string_view kBruteForce = "brute-force";
inline constexpr std::string_view kSubdivision = "subdivision-transfer";
inline constexpr std::string_view kCapability = "capability-gate";
inline constexpr std::string_view kNoRule = "no-structural-rule";
}  // namespace rules

struct UdpVerdict {
  UdpStatus status = UdpStatus::Undecided;
  std::string rule;
  std::optional<Witness> witness;
  std::vector<std::string> evidence;
};

}  // namespace udpkit
