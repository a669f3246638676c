#pragma once

// Line-oriented graph files:
//
//   ring w
//   vertex u
//   vertex z
//   edge uz u z <x>
//   spline u=x z=0
//
// '#' starts a comment. "spline" lines are optional and may repeat.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udpkit/graph.hpp"
#include "udpkit/spline.hpp"

namespace udpkit {

struct GraphDocument {
  LabeledGraph graph;
  std::vector<VertexValues> splines;
};

/// Parses a graph file. Errors are ParseError with the offending line number.
GraphDocument parse_graph_document(std::string_view text);
LabeledGraph parse_graph_file(std::string_view text);

/// Reads and parses a file; I/O failures raise ParseError.
GraphDocument load_graph_document(const std::filesystem::path& path);

/// Canonical text form; parse_graph_file inverts it.
std::string serialize_graph(const LabeledGraph& g, std::span<const VertexValues> splines = {});

}  // namespace udpkit
