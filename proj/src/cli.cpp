#include "udpkit/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "udpkit/analysis.hpp"
#include "udpkit/census.hpp"
#include "udpkit/graph_io.hpp"

namespace udpkit::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  std::string format = "human";
  bool timing = false;
  unsigned workers = 1;
  double cap = 1e8;

  bool as_json() const { return format == "json"; }
  SearchOptions search() const { return SearchOptions{cap, workers}; }
};

/// What a command hands back: the JSON document, the human text, the exit code.
struct Output {
  Output() = default;
  explicit Output(json d) : doc(std::move(d)) {}

  json doc;
  std::string text;
  int code = kSuccess;
};

json make_doc(std::string_view command) {
  json d;
  d["command"] = command;
  d["ring"] = nullptr;
  d["graph"] = nullptr;
  d["status"] = nullptr;
  d["rule"] = nullptr;
  d["witness"] = nullptr;
  d["evidence"] = json::array();
  return d;
}

json graph_json(const LabeledGraph& g, const std::optional<std::string>& source, bool with_text) {
  json out;
  out["source"] = source ? json(*source) : json(nullptr);
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  if (with_text) out["text"] = serialize_graph(g);
  return out;
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return json{{"u", w->u}, {"w", w->w}, {"x", w->x.to_string()}, {"certified", w->certified}};
}

json verdict_json(const UdpVerdict& v) {
  return json{{"status", to_string(v.status)},
              {"rule", v.rule},
              {"witness", witness_json(v.witness)},
              {"evidence", v.evidence}};
}

void put_verdict(json& doc, const UdpVerdict& v) {
  doc["status"] = to_string(v.status);
  doc["rule"] = v.rule;
  doc["witness"] = witness_json(v.witness);
  doc["evidence"] = v.evidence;
}

std::string witness_text(const Witness& w) {
  std::string s = "u=" + w.u + " w=" + w.w + " x=" + w.x.to_string();
  if (!w.certified) s += " (symbolic; not certified by enumeration)";
  return s;
}

std::string verdict_text(const UdpVerdict& v, std::string_view indent = "") {
  std::ostringstream s;
  s << indent << "status: " << to_string(v.status) << "\n";
  s << indent << "rule: " << v.rule << "\n";
  if (v.witness) s << indent << "witness: " << witness_text(*v.witness) << "\n";
  if (!v.evidence.empty()) {
    s << indent << "evidence:\n";
    for (const auto& line : v.evidence) s << indent << "  " << line << "\n";
  }
  return s.str();
}

int status_code(UdpStatus s) {
  switch (s) {
    case UdpStatus::Holds: return kSuccess;
    case UdpStatus::Fails: return kFails;
    case UdpStatus::Undecided: return kUndecided;
  }
  return kUndecided;
}

std::string graph_header(const LabeledGraph& g, const std::string& source) {
  return "graph: " + source + " (" + std::to_string(g.vertex_count()) + " vertices, " +
         std::to_string(g.edge_count()) + " edges, ring " + g.ring().literal() + ")\n";
}

std::string indent_lines(const std::string& text, std::string_view prefix) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string::npos ? text.size() : nl;
    out += std::string(prefix) + text.substr(pos, end - pos) + "\n";
    pos = end + 1;
  }
  return out;
}

std::string triple_text(const IdealTriple& t) {
  return "I = " + t.i.to_string() + ", J = " + t.j.to_string() + ", K = " + t.k.to_string();
}

json triple_json(const std::optional<IdealTriple>& t) {
  if (!t) return nullptr;
  return json::array({t->i.to_string(), t->j.to_string(), t->k.to_string()});
}

// --- commands ----------------------------------------------------------------

Output check_udp(const std::string& path, const std::string& method, const Settings& settings) {
  Output o{make_doc("check-udp")};
  const auto g = load_graph_document(path).graph;
  o.doc["ring"] = g.ring().literal();
  o.doc["graph"] = graph_json(g, path, false);
  o.text = graph_header(g, path);

  UdpVerdict verdict;
  if (method == "structural") {
    verdict = udp_structural(g);
  } else if (method == "brute") {
    verdict = udp_bruteforce(g, settings.search());
  } else if (method == "both") {
    const auto structural = udp_structural(g);
    try {
      verdict = udp_bruteforce(g, settings.search());
    } catch (const CapabilityError& e) {
      verdict = {UdpStatus::Undecided, std::string(rules::kCapability), std::nullopt, {e.what()}};
    }
    const bool agree = structural.status == UdpStatus::Undecided || verdict.status == UdpStatus::Undecided ||
                       structural.status == verdict.status;
    o.doc["result"] = json{{"structural", verdict_json(structural)},
                           {"brute_force", verdict_json(verdict)},
                           {"agree", agree}};
    o.text += "structural: " + std::string(to_string(structural.status)) + " (" + structural.rule + ")\n";
    o.text += "brute force: " + std::string(to_string(verdict.status)) + " (" + verdict.rule + ")\n";
    if (!agree) {
      put_verdict(o.doc, verdict);
      o.text += "DISCREPANCY: structural rule and brute force disagree\n" + verdict_text(verdict);
      o.code = kDiscrepancy;
      return o;
    }
    if (verdict.status == UdpStatus::Undecided) verdict = structural;
  } else {
    verdict = udp_structural(g);
    if (verdict.status == UdpStatus::Undecided && g.ring().is_finite()) {
      try {
        verdict = udp_bruteforce(g, settings.search());
      } catch (const SearchSpaceError& e) {
        verdict.evidence.push_back(std::string("brute force skipped: ") + e.what());
      }
    }
  }
  put_verdict(o.doc, verdict);
  o.text += verdict_text(verdict);
  o.code = status_code(verdict.status);
  return o;
}

Output analyze(const std::string& path) {
  Output o{make_doc("analyze")};
  const auto g = load_graph_document(path).graph;
  o.doc["ring"] = g.ring().literal();
  o.doc["graph"] = graph_json(g, path, false);
  const auto cls = classify_structure(g);
  const bool pedpp = has_pedpp(g);

  json pairs = json::array();
  std::set<std::string> all_chokes;
  std::string pair_text;
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    for (std::size_t b = a + 1; b < g.vertex_count(); ++b) {
      const auto& u = g.vertices()[a];
      const auto& v = g.vertices()[b];
      const auto chokes = choke_points(g, u, v);
      const auto count = all_path_edges(g, a, b).size();
      all_chokes.insert(chokes.begin(), chokes.end());
      pairs.push_back(json{{"u", u}, {"v", v}, {"paths", count}, {"choke_points", chokes}});
      std::string c;
      for (const auto& x : chokes) c += (c.empty() ? "" : ", ") + x;
      pair_text += "  " + u + " " + v + ": " + std::to_string(count) + (count == 1 ? " path" : " paths") +
                   "; choke points: " + (c.empty() ? "none" : c) + "\n";
    }
  }
  std::string chokes;
  for (const auto& x : all_chokes) chokes += (chokes.empty() ? "" : ", ") + x;
  o.doc["result"] = json{{"structure", to_string(cls)},
                         {"simple", g.is_simple()},
                         {"unicyclic", is_unicyclic(g)},
                         {"pedpp", pedpp},
                         {"choke_points", all_chokes},
                         {"pairs", pairs}};
  o.text = std::string(to_string(cls)) + "; PEDPP: " + (pedpp ? "yes" : "no") +
           "; choke points: " + (chokes.empty() ? "none" : chokes) + "\n";
  o.text += graph_header(g, path);
  o.text += "pairs:\n" + pair_text;
  return o;
}

Output paths(const std::string& path, const std::string& u, const std::string& v) {
  Output o{make_doc("paths")};
  const auto g = load_graph_document(path).graph;
  o.doc["ring"] = g.ring().literal();
  o.doc["graph"] = graph_json(g, path, false);
  const auto list = all_paths(g, u, v);
  json arr = json::array();
  o.text = std::to_string(list.size()) + (list.size() == 1 ? " path" : " paths") + " from " + u + " to " + v + "\n";
  for (const auto& p : list) {
    const auto sum = path_label_sum(g, p).to_string();
    arr.push_back(json{{"vertices", p.vertices}, {"edges", p.edges}, {"label_sum", sum}});
    std::string line = "  " + p.vertices.front();
    for (std::size_t i = 0; i < p.edges.size(); ++i) line += " -" + p.edges[i] + "- " + p.vertices[i + 1];
    o.text += line + "   sum " + sum + "\n";
  }
  json inter = nullptr;
  if (g.ring().has(Capability::Intersect)) {
    const auto ideal = paths_intersection(g, u, v).to_string();
    inter = ideal;
    o.text += "intersection: " + ideal + "\n";
  } else {
    o.text += "intersection: unavailable (" + g.ring().literal() + " lacks intersect)\n";
  }
  o.doc["result"] = json{{"paths", arr}, {"intersection", inter}};
  return o;
}

Output emit_graph(std::string_view command, const LabeledGraph& g) {
  Output o{make_doc(command)};
  o.doc["ring"] = g.ring().literal();
  o.doc["graph"] = graph_json(g, std::nullopt, true);
  o.text = serialize_graph(g);
  return o;
}

Output counterexample(const std::string& shape, const std::string& ring_text, const std::string& skeleton_path,
                      const Settings& settings) {
  const Ring ring = parse_ring(ring_text);
  Output o{make_doc("counterexample")};
  o.doc["ring"] = ring.literal();
  if (!skeleton_path.empty() && shape != "auto") {
    throw ParseError("--skeleton only applies to --shape auto");
  }
  std::optional<Construction> built;
  std::optional<IdealTriple> triple;
  if (shape == "diamond") {
    if (!ring.is_finite()) throw CapabilityError("diamond triple search needs a finite ring");
    triple = find_diamond_triple(ring);
    if (!triple) throw ObstructionError("no triple with (I + K) ∩ (J + K) != (I ∩ J) + K in " + ring.literal());
    built = build_diamond_counterexample(triple->i, triple->j, triple->k);
  } else if (shape == "unicyclic" || skeleton_path.empty()) {
    if (!ring.is_finite()) throw CapabilityError("ideal triple search needs a finite ring");
    triple = find_sum_nondistributive_triple(ring);
    if (!triple) throw ObstructionError(ring.literal() + " has a distributive ideal lattice; no counterexample exists");
    built = build_unicyclic_counterexample(triple->i, triple->j, triple->k);
  } else {
    const auto host = load_graph_document(skeleton_path).graph;
    built = construct_failing_labeling(host.skeleton(), ring);
  }
  const auto verdict = udp_bruteforce(built->graph, settings.search());
  put_verdict(o.doc, verdict);
  o.doc["graph"] = graph_json(built->graph, std::nullopt, true);
  o.doc["result"] = json{{"shape", shape}, {"triple", triple_json(triple)}, {"u", built->u}, {"w", built->w}};
  std::string header = "# status: " + std::string(to_string(verdict.status)) + " (" + verdict.rule + ")\n";
  if (triple) header += "# triple: " + triple_text(*triple) + "\n";
  if (verdict.witness) header += "# witness: " + witness_text(*verdict.witness) + "\n";
  o.text = header + serialize_graph(built->graph);
  o.code = verdict.status == UdpStatus::Fails && reverify_witness(built->graph, verdict, settings.search())
               ? kSuccess
               : kDiscrepancy;
  return o;
}

Output witness(const std::string& ring_text, const Settings& settings) {
  const Ring ring = parse_ring(ring_text);
  Output o{make_doc("witness")};
  o.doc["ring"] = ring.literal();
  const auto report = check_prufer_obstruction(ring, settings.search());
  o.text = "ring: " + ring.literal() + "\n";
  json result{{"nondistributive_triple", triple_json(report.triple)},
              {"construction_triple", triple_json(report.construction_triple)}};
  if (!report.triple) {
    o.doc["status"] = "none";
    o.text += "no non-distributive ideal triple: I ∩ (J + K) = (I ∩ J) + (I ∩ K) for all ideals\n";
    o.text += "the counterexample constructions cannot produce a UDP failure over this ring\n";
  } else {
    const auto& t = *report.triple;
    o.text += "non-distributive triple: " + triple_text(t) + "\n";
    o.text += "  I ∩ (J + K) = " + ideal_intersect(t.i, ideal_sum(t.j, t.k)).to_string() +
              ", (I ∩ J) + (I ∩ K) = " + ideal_sum(ideal_intersect(t.i, t.j), ideal_intersect(t.i, t.k)).to_string() +
              "\n";
    if (report.graph) {
      o.doc["graph"] = graph_json(report.graph->graph, std::nullopt, true);
      put_verdict(o.doc, *report.verdict);
      o.text += "labeling triple: " + triple_text(*report.construction_triple) + "\n";
      o.text += "obstruction graph:\n" + indent_lines(serialize_graph(report.graph->graph), "  ");
      o.text += "brute force:\n" + verdict_text(*report.verdict, "  ");
    }
  }
  o.doc["result"] = result;
  return o;
}

Output census(const std::string& ring_text, std::size_t max_vertices, const std::string& labelings,
              std::uint64_t seed, const Settings& settings) {
  const Ring ring = parse_ring(ring_text);
  CensusOptions options;
  options.max_vertices = max_vertices;
  options.seed = seed;
  options.search = settings.search();
  if (labelings.rfind("sample:", 0) == 0) {
    const auto k = labelings.substr(7);
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || std::stoull(k) == 0) {
      throw ParseError("--labelings sample:<k> needs a positive integer");
    }
    options.sample = std::stoull(k);
  } else if (labelings != "all") {
    throw ParseError("--labelings must be 'all' or 'sample:<k>'");
  }
  const auto report = run_census(ring, options);

  Output o{make_doc("census")};
  o.doc["ring"] = ring.literal();
  json rows = json::array();
  std::ostringstream s;
  s << "census over " << ring.literal() << ", connected graphs on 2.." << max_vertices << " vertices, "
    << labelings << " labelings\n";
  s << "graphs: " << report.graphs << ", labelings: " << report.labelings << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-32s %12s %14s %10s\n", "check", "instances", "discrepancies", "skipped");
  s << line;
  for (const auto& r : report.rows) {
    rows.push_back(json{{"check", r.check},
                        {"instances", r.instances},
                        {"discrepancies", r.discrepancies},
                        {"skipped", r.skipped}});
    std::snprintf(line, sizeof line, "%-32s %12llu %14llu %10llu\n", r.check.c_str(),
                  static_cast<unsigned long long>(r.instances), static_cast<unsigned long long>(r.discrepancies),
                  static_cast<unsigned long long>(r.skipped));
    s << line;
  }
  s << "brute force: holds on trees and cycles " << report.holds_tree_or_cycle << ", holds elsewhere "
    << report.holds_other << ", fails elsewhere " << report.fails_other << "\n";
  s << "discrepancies: " << report.discrepancies() << "\n";
  o.text = s.str();
  o.doc["status"] = report.discrepancies() == 0 ? "agree" : "discrepancy";
  o.doc["result"] = json{{"graphs", report.graphs},
                         {"labelings", report.labelings},
                         {"rows", rows},
                         {"holds_tree_or_cycle", report.holds_tree_or_cycle},
                         {"holds_other", report.holds_other},
                         {"fails_other", report.fails_other},
                         {"discrepancies", report.discrepancies()}};
  o.code = report.discrepancies() == 0 ? kSuccess : kDiscrepancy;
  return o;
}

Output verify(const std::string& path) {
  Output o{make_doc("verify")};
  const auto doc = load_graph_document(path);
  const auto& g = doc.graph;
  o.doc["ring"] = g.ring().literal();
  o.doc["graph"] = graph_json(g, path, false);
  if (doc.splines.empty()) throw ParseError("'" + path + "' has no spline lines");
  json arr = json::array();
  o.text = graph_header(g, path);
  bool all_ok = true;
  for (std::size_t i = 0; i < doc.splines.size(); ++i) {
    const auto check = verify_spline(g, doc.splines[i]);
    all_ok = all_ok && check.ok;
    arr.push_back(json{{"ok", check.ok}, {"failing_edges", check.failing_edges}});
    std::string failing;
    for (const auto& e : check.failing_edges) failing += (failing.empty() ? "" : ", ") + e;
    o.text += "spline " + std::to_string(i + 1) + ": " +
              (check.ok ? "ok (" + std::to_string(g.edge_count()) + "/" + std::to_string(g.edge_count()) +
                              " edges)"
                        : "fails on " + failing) +
              "\n";
  }
  o.doc["status"] = all_ok ? "ok" : "fails";
  o.doc["result"] = json{{"splines", arr}};
  o.code = all_ok ? kSuccess : kFails;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized graph splines and the Universal Difference Property", "udpkit"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--format", settings.format, "Report format")->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--timing", settings.timing, "Report wall time");
  app.add_option("--workers", settings.workers, "Worker threads for spline search")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", settings.cap, "Largest brute-force search space |R|^(|V|-1)")
      ->check(CLI::PositiveNumber);

  std::string file, file2, u, v, z1, z2, edge, method = "auto", shape = "auto", ring, skeleton;
  std::string labelings = "all";
  std::size_t segments = 2, max_vertices = 4;
  std::uint64_t seed = 1;

  auto* check_cmd = app.add_subcommand("check-udp", "Decide the Universal Difference Property");
  check_cmd->add_option("file", file, "Graph file")->required();
  check_cmd->add_option("--method", method, "auto, structural, brute or both")
      ->check(CLI::IsMember({"auto", "structural", "brute", "both"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "Structure class, PEDPP, choke points and path counts");
  analyze_cmd->add_option("file", file, "Graph file")->required();

  auto* paths_cmd = app.add_subcommand("paths", "All paths between two vertices with their label sums");
  paths_cmd->add_option("file", file, "Graph file")->required();
  paths_cmd->add_option("u", u, "First vertex")->required();
  paths_cmd->add_option("v", v, "Second vertex")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Collapse parallel edges");
  reduce_cmd->add_option("file", file, "Graph file")->required();

  auto* subdivide_cmd = app.add_subcommand("subdivide", "Split an edge into a path");
  subdivide_cmd->add_option("file", file, "Graph file")->required();
  subdivide_cmd->add_option("edge", edge, "Edge id")->required();
  subdivide_cmd->add_option("segments", segments, "Number of segments (>= 2)")->required();

  auto* paste_cmd = app.add_subcommand("paste", "Identify a vertex of one graph with a vertex of another");
  paste_cmd->add_option("file1", file, "First graph file")->required();
  paste_cmd->add_option("file2", file2, "Second graph file")->required();
  paste_cmd->add_option("z1", z1, "Vertex of the first graph")->required();
  paste_cmd->add_option("z2", z2, "Vertex of the second graph")->required();

  auto* counter_cmd = app.add_subcommand("counterexample", "Emit a labeling on which UDP fails");
  counter_cmd->add_option("--shape", shape, "diamond, unicyclic or auto")
      ->check(CLI::IsMember({"diamond", "unicyclic", "auto"}));
  counter_cmd->add_option("--ring", ring, "Ring literal")->required();
  counter_cmd->add_option("--skeleton", skeleton, "Graph file whose shape is labeled (shape auto)");

  auto* witness_cmd = app.add_subcommand("witness", "Search a ring for a non-distributive ideal triple");
  witness_cmd->add_option("--ring", ring, "Ring literal")->required();

  auto* census_cmd = app.add_subcommand("census", "Cross-validate the decision rules on small graphs");
  census_cmd->add_option("--ring", ring, "Ring literal")->required();
  census_cmd->add_option("--max-vertices", max_vertices, "Largest vertex count")->required()->check(CLI::Range(2, 7));
  census_cmd->add_option("--labelings", labelings, "all or sample:<k>");
  census_cmd->add_option("--seed", seed, "Sampling seed");

  auto* verify_cmd = app.add_subcommand("verify", "Check the spline lines of a graph file");
  verify_cmd->add_option("file", file, "Graph file with spline lines")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Output o;
  try {
    if (check_cmd->parsed()) {
      o = check_udp(file, method, settings);
    } else if (analyze_cmd->parsed()) {
      o = analyze(file);
    } else if (paths_cmd->parsed()) {
      o = paths(file, u, v);
    } else if (reduce_cmd->parsed()) {
      const auto g = load_graph_document(file).graph;
      o = emit_graph("reduce", reduce_multigraph(g));
    } else if (subdivide_cmd->parsed()) {
      const auto g = load_graph_document(file).graph;
      const SubdivisionStep step{edge, segments};
      o = emit_graph("subdivide", subdivide_labeled(g, std::span(&step, 1)).graph);
    } else if (paste_cmd->parsed()) {
      const auto g1 = load_graph_document(file).graph;
      const auto g2 = load_graph_document(file2).graph;
      o = emit_graph("paste", paste_at_vertex(g1, g2, z1, z2).graph);
    } else if (counter_cmd->parsed()) {
      o = counterexample(shape, ring, skeleton, settings);
    } else if (witness_cmd->parsed()) {
      o = witness(ring, settings);
    } else if (census_cmd->parsed()) {
      o = census(ring, max_vertices, labelings, seed, settings);
    } else if (verify_cmd->parsed()) {
      o = verify(file);
    }
  } catch (const CapabilityError& e) {
    err << "udpkit: " << e.what() << "\n";
    return kUndecided;
  } catch (const ObstructionError& e) {
    err << "udpkit: " << e.what() << "\n";
    return kUndecided;
  } catch (const Error& e) {
    err << "udpkit: error: " << e.what() << "\n";
    return kUsage;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (settings.as_json()) {
    o.doc["timing_ms"] = settings.timing ? json(ms) : json(nullptr);
    out << o.doc.dump(2) << "\n";
  } else {
    out << o.text;
    if (settings.timing) out << "# time: " << ms << " ms\n";
  }
  return o.code;
}

}  // namespace udpkit::cli
