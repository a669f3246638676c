#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udpkit/spline.hpp"

namespace udpkit {

struct CensusOptions {
  std::size_t max_vertices = 4;
  /// Labelings per graph; unset means every labeling.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  SearchOptions search;
};

struct CensusRow {
  std::string check;
  std::uint64_t instances = 0;
  std::uint64_t discrepancies = 0;
  std::uint64_t skipped = 0;
};

struct CensusReport {
  std::string ring;
  std::size_t graphs = 0;
  std::uint64_t labelings = 0;
  /// Brute-force outcomes over all labelings, split by structure.
  std::uint64_t holds_tree_or_cycle = 0;
  std::uint64_t holds_other = 0;
  std::uint64_t fails_other = 0;
  std::vector<CensusRow> rows;

  std::uint64_t discrepancies() const;
};

/// Cross-validates the structural rules against brute force on every
/// connected simple graph with 2..max_vertices vertices over a finite ring.
CensusReport run_census(const Ring& ring, const CensusOptions& options);

}  // namespace udpkit
