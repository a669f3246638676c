#include "udpkit/census.hpp"

#include <array>
#include <random>

#include "udpkit/analysis.hpp"
#include "udpkit/generate.hpp"

namespace udpkit {

std::uint64_t CensusReport::discrepancies() const {
  std::uint64_t total = 0;
  for (const auto& row : rows) total += row.discrepancies;
  return total;
}

namespace {

enum Check { kStructural, kTreeCycle, kReverify, kPedpp, kFailing, kCheckCount };

const char* const kCheckNames[kCheckCount] = {
    "structural-vs-brute-force",
    "tree-or-cycle-holds",
    "witness-reverification",
    "pedpp-choke-point-equivalence",
    "failing-labeling-fails",
};

}  // namespace

CensusReport run_census(const Ring& ring, const CensusOptions& options) {
  if (!ring.is_finite()) throw CapabilityError("census needs a finite ring; " + ring.literal() + " cannot be enumerated");
  CensusReport report;
  report.ring = ring.literal();
  for (std::size_t c = 0; c < kCheckCount; ++c) report.rows.push_back({kCheckNames[c]});
  auto& rows = report.rows;

  const auto ideals = all_ideals(ring);
  const std::uint64_t q = ideals.size();
  std::mt19937_64 rng(options.seed);
  const bool has_triple = find_sum_nondistributive_triple(ring).has_value();

  for (std::size_t n = 2; n <= options.max_vertices; ++n) {
    for (const auto& shape : connected_graphs(n)) {
      ++report.graphs;
      const Skeleton skeleton = to_skeleton(shape);
      std::vector<Ideal> labels(skeleton.edges.size(), ideals.front());
      const auto plain = LabeledGraph::from_skeleton(ring, skeleton, labels);
      const bool tree_or_cycle = classify_structure(plain) != StructureClass::Other;

      // Structure: three independent characterizations must agree.
      {
        bool chokes_empty = true;
        for (std::size_t a = 0; a < n && chokes_empty; ++a) {
          for (std::size_t b = a + 1; b < n && chokes_empty; ++b) {
            chokes_empty = choke_points(plain, skeleton.vertices[a], skeleton.vertices[b]).empty();
          }
        }
        const bool pedpp = has_pedpp(plain);
        ++rows[kPedpp].instances;
        if (pedpp != chokes_empty || pedpp != tree_or_cycle) ++rows[kPedpp].discrepancies;
      }

      if (!tree_or_cycle) {
        ++rows[kFailing].instances;
        if (!has_triple) {
          ++rows[kFailing].skipped;
        } else {
          try {
            const auto built = construct_failing_labeling(skeleton, ring);
            const auto verdict = udp_bruteforce(built.graph, options.search);
            if (verdict.status != UdpStatus::Fails) ++rows[kFailing].discrepancies;
          } catch (const SearchSpaceError&) {
            ++rows[kFailing].skipped;
          }
        }
      }

      // Labelings: every one, or a uniform sample.
      const std::size_t m = skeleton.edges.size();
      double total = 1;
      for (std::size_t e = 0; e < m; ++e) total *= static_cast<double>(q);
      const bool exhaustive = !options.sample || static_cast<double>(*options.sample) >= total;
      const std::uint64_t count = exhaustive ? static_cast<std::uint64_t>(total) : *options.sample;
      std::vector<std::uint64_t> digits(m, 0);
      std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);

      for (std::uint64_t t = 0; t < count; ++t) {
        if (exhaustive) {
          if (t > 0) {
            for (std::size_t e = 0; e < m; ++e) {
              if (++digits[e] < q) break;
              digits[e] = 0;
            }
          }
        } else {
          for (auto& d : digits) d = pick(rng);
        }
        for (std::size_t e = 0; e < m; ++e) labels[e] = ideals[digits[e]];
        const auto g = plain.relabeled(labels);
        ++report.labelings;

        UdpVerdict brute;
        try {
          brute = udp_bruteforce(g, options.search);
        } catch (const SearchSpaceError&) {
          ++rows[kStructural].skipped;
          continue;
        }
        if (brute.status == UdpStatus::Holds) {
          (tree_or_cycle ? report.holds_tree_or_cycle : report.holds_other) += 1;
        } else if (!tree_or_cycle) {
          ++report.fails_other;
        }
        if (tree_or_cycle) {
          ++rows[kTreeCycle].instances;
          if (brute.status != UdpStatus::Holds) ++rows[kTreeCycle].discrepancies;
        }

        const auto structural = udp_structural(g);
        ++rows[kStructural].instances;
        if (structural.status == UdpStatus::Undecided) {
          ++rows[kStructural].skipped;
        } else if (structural.status != brute.status) {
          ++rows[kStructural].discrepancies;
        }

        for (const UdpVerdict* v : std::array<const UdpVerdict*, 2>{&brute, &structural}) {
          if (v->status != UdpStatus::Fails) continue;
          ++rows[kReverify].instances;
          if (!reverify_witness(g, *v, options.search)) ++rows[kReverify].discrepancies;
        }
      }
    }
  }
  return report;
}

}  // namespace udpkit
