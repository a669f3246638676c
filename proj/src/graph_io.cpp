#include "udpkit/graph_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace udpkit {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Splits off the first whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  const auto end = rest.find_first_of(" \t");
  const auto token = rest.substr(0, end);
  rest = end == std::string_view::npos ? std::string_view{} : trim(rest.substr(end));
  return token;
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  std::optional<Ring> ring;
  std::vector<std::string> vertices;
  std::set<std::string> vertex_names;
  std::vector<Edge> edges;
  std::set<std::string> edge_ids;
  std::vector<std::pair<int, std::string>> spline_lines;
  int last_line = 0;

  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    last_line = number;

    std::string_view rest = line;
    const auto keyword = next_token(rest);
    try {
      if (!ring) {
        if (keyword != "ring") throw ParseError("expected 'ring <literal>' before anything else", number);
        ring = parse_ring(rest);
        continue;
      }
      if (keyword == "ring") throw ParseError("ring declared twice", number);
      if (keyword == "vertex") {
        const std::string name(next_token(rest));
        if (name.empty() || !rest.empty()) throw ParseError("expected 'vertex <name>'", number);
        if (!vertex_names.insert(name).second) throw ParseError("duplicate vertex '" + name + "'", number);
        vertices.push_back(name);
      } else if (keyword == "edge") {
        const std::string id(next_token(rest));
        const std::string u(next_token(rest));
        const std::string v(next_token(rest));
        if (id.empty() || u.empty() || v.empty() || rest.empty()) {
          throw ParseError("expected 'edge <id> <u> <v> <ideal>'", number);
        }
        if (!edge_ids.insert(id).second) throw ParseError("duplicate edge id '" + id + "'", number);
        for (const auto& end : {u, v}) {
          if (!vertex_names.count(end)) {
            throw ParseError("edge '" + id + "' references undeclared vertex '" + end + "'", number);
          }
        }
        if (u == v) throw ParseError("edge '" + id + "' is a loop", number);
        Ideal label = parse_ideal(*ring, rest);
        if (ring->kind() == RingKind::ZPoly && label.generators().size() != 1) {
          throw ParseError("zpoly edge labels must be principal: membership needs a single generator", number);
        }
        edges.push_back({id, u, v, std::move(label)});
      } else if (keyword == "spline") {
        spline_lines.emplace_back(number, std::string(rest));
      } else {
        throw ParseError("unknown directive '" + std::string(keyword) + "'", number);
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), number);
    } catch (const Error& e) {
      throw ParseError(e.what(), number);
    }
  }
  if (!ring) throw ParseError("empty graph file: missing 'ring' line");

  std::optional<LabeledGraph> graph;
  try {
    graph.emplace(*ring, std::move(vertices), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(e.what(), last_line);
  }

  GraphDocument doc{std::move(*graph), {}};
  for (const auto& [line_no, body] : spline_lines) {
    VertexValues values;
    std::string_view rest = body;
    try {
      while (!rest.empty()) {
        const auto token = next_token(rest);
        const auto eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == token.size()) {
          throw ParseError("expected '<vertex>=<element>', got '" + std::string(token) + "'", line_no);
        }
        const std::string name(token.substr(0, eq));
        if (!doc.graph.has_vertex(name)) throw ParseError("spline names unknown vertex '" + name + "'", line_no);
        if (!values.emplace(name, parse_element(*ring, token.substr(eq + 1))).second) {
          throw ParseError("vertex '" + name + "' assigned twice", line_no);
        }
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line_no);
    }
    for (const auto& v : doc.graph.vertices()) {
      if (!values.count(v)) throw ParseError("spline has no value for vertex '" + v + "'", line_no);
    }
    doc.splines.push_back(std::move(values));
  }
  return doc;
}

LabeledGraph parse_graph_file(std::string_view text) { return parse_graph_document(text).graph; }

GraphDocument load_graph_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_document(buffer.str());
}

std::string serialize_graph(const LabeledGraph& g, std::span<const VertexValues> splines) {
  std::string out = "ring " + g.ring().literal() + "\n";
  for (const auto& v : g.vertices()) out += "vertex " + v + "\n";
  for (const auto& e : g.edges()) out += "edge " + e.id + " " + e.u + " " + e.v + " " + e.label.to_string() + "\n";
  for (const auto& values : splines) {
    out += "spline";
    for (const auto& v : g.vertices()) out += " " + v + "=" + values.at(v).to_string();
    out += "\n";
  }
  return out;
}

}  // namespace udpkit
