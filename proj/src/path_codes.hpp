#pragma once

#include <cstdint>
#include <vector>

#include "fast_ideal.hpp"
#include "udpkit/graph.hpp"

namespace udpkit::detail {

/// Path intersections for every vertex pair as ideal codes, row-major n x n.
/// The diagonal holds the unit code.
std::vector<std::uint64_t> intersection_codes(const LabeledGraph& g, const FastIdeals& alg);

}  // namespace udpkit::detail
