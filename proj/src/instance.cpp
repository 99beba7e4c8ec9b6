#include "ztg/verifier.hpp"

#include <fstream>
#include <sstream>

namespace ztg {

namespace {

std::vector<std::int64_t> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError(what + " must contain integers only");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

std::vector<std::vector<std::int64_t>> tuple_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array of integer tuples");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& v : j) out.push_back(int_list(v, what + " entry"));
  return out;
}

} // namespace

Json InstanceSpec::to_json() const {
  Json j;
  j["ring"] = ring;
  j["module"] = blocks;
  switch (t.kind) {
    case TSelector::Kind::Spec:
      j["T"] = "spec";
      break;
    case TSelector::Kind::ClosedOf:
      j["T"] = Json{{"closed_of", t.closed_of}};
      break;
    case TSelector::Kind::Primes:
      j["T"] = Json{{"primes", t.primes}};
      break;
  }
  if (s_tuples) j["S"] = *s_tuples;
  if (caps_overridden) {
    j["caps"] = Json{{"max_elements", caps.max_elements},
                     {"max_submodules", caps.max_submodules},
                     {"max_chi_vertices", caps.max_chi_vertices}};
  }
  return j;
}

InstanceSpec InstanceSpec::from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("instance must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "ring" && key != "module" && key != "T" && key != "S" && key != "caps")
      throw SchemaError("unknown instance key: " + key);
  }
  if (!j.contains("ring") || !j.contains("module"))
    throw SchemaError("instance requires \"ring\" and \"module\"");
  InstanceSpec out;
  out.ring = int_list(j.at("ring"), "ring");
  out.blocks = tuple_list(j.at("module"), "module");
  if (j.contains("T")) {
    const Json& t = j.at("T");
    if (t.is_string()) {
      if (t.get<std::string>() != "spec") throw SchemaError("T string must be \"spec\"");
      out.t.kind = TSelector::Kind::Spec;
    } else if (t.is_object()) {
      if (t.size() != 1) throw SchemaError("T object must have exactly one key");
      if (t.contains("closed_of")) {
        out.t.kind = TSelector::Kind::ClosedOf;
        out.t.closed_of = tuple_list(t.at("closed_of"), "T.closed_of");
      } else if (t.contains("primes")) {
        out.t.kind = TSelector::Kind::Primes;
        for (auto v : int_list(t.at("primes"), "T.primes"))
          out.t.primes.push_back(static_cast<int>(v));
      } else {
        throw SchemaError("T object must be {closed_of: ...} or {primes: ...}");
      }
    } else {
      throw SchemaError("T must be \"spec\" or an object");
    }
  }
  if (j.contains("S")) out.s_tuples = tuple_list(j.at("S"), "S");
  if (j.contains("caps")) {
    const Json& c = j.at("caps");
    if (!c.is_object()) throw SchemaError("caps must be an object");
    for (const auto& [key, _] : c.items()) {
      if (key != "max_elements" && key != "max_submodules" && key != "max_chi_vertices")
        throw SchemaError("unknown caps key: " + key);
    }
    if (c.contains("max_elements")) out.caps.max_elements = c.at("max_elements").get<std::int64_t>();
    if (c.contains("max_submodules"))
      out.caps.max_submodules = c.at("max_submodules").get<std::int64_t>();
    if (c.contains("max_chi_vertices"))
      out.caps.max_chi_vertices = c.at("max_chi_vertices").get<int>();
    out.caps_overridden = true;
  }
  return out;
}

InstanceSpec InstanceSpec::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open instance file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError("invalid JSON in " + path + ": " + e.what());
  }
  return from_json(j);
}

std::string InstanceSpec::repro_command(const std::string& theorem) const {
  std::ostringstream os;
  os << "ztg verify --theorem " << theorem << " --instance-json '" << to_json().dump()
     << "'";
  return os.str();
}

Json TheoremReport::to_json(bool with_timing) const {
  Json j;
  j["theorem"] = theorem;
  j["instance"] = instance;
  Json hy = Json::array();
  for (const auto& [name, holds] : hypotheses) hy.push_back(Json{{name, holds}});
  j["hypotheses"] = hy;
  j["applicable"] = applicable;
  if (conclusion_holds.has_value())
    j["conclusion_holds"] = *conclusion_holds;
  else
    j["conclusion_holds"] = nullptr;
  if (!witness.is_null()) j["witness"] = witness;
  if (!note.empty()) j["note"] = note;
  if (skipped) {
    j["skipped"] = true;
    j["skip_reason"] = skip_reason;
  }
  if (with_timing) j["ms"] = ms;
  return j;
}

Json SweepSummary::to_json() const {
  Json j;
  j["total"] = total;
  j["applicable"] = applicable;
  j["passed"] = passed;
  j["failed"] = failed;
  j["not_applicable"] = not_applicable;
  j["skipped"] = skipped;
  return j;
}

Json metrics_to_json(const GraphMetrics& m) {
  Json j;
  j["vertices"] = m.vertices;
  j["edges"] = m.edges;
  switch (m.diam_kind) {
    case GraphMetrics::DiamKind::Empty:
      j["diameter"] = "empty";
      break;
    case GraphMetrics::DiamKind::Disconnected:
      j["diameter"] = "disconnected";
      break;
    case GraphMetrics::DiamKind::Finite:
      j["diameter"] = m.diameter;
      break;
  }
  if (m.acyclic)
    j["girth"] = "acyclic";
  else
    j["girth"] = m.girth;
  j["is_bipartite"] = m.is_bipartite;
  j["is_tree"] = m.is_tree;
  j["is_star"] = m.is_star;
  j["is_complete_bipartite"] = m.is_complete_bipartite;
  if (m.is_complete_bipartite)
    j["parts"] = Json::array({m.part_a, m.part_b});
  else
    j["parts"] = nullptr;
  j["is_regular"] = m.is_regular;
  if (m.is_regular)
    j["degree"] = m.degree;
  else
    j["degree"] = nullptr;
  j["max_degree"] = m.max_degree;
  if (m.clique_number >= 0) j["clique_number"] = m.clique_number;
  if (m.chromatic_number >= 0) j["chromatic_number"] = m.chromatic_number;
  return j;
}

Json graph_to_json(const Graph& g, const GraphMetrics* m) {
  Json j;
  j["vertices"] = g.labels;
  Json edges = Json::array();
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int k = i + 1; k < g.vertex_count(); ++k)
      if (g.adjacent(i, k)) edges.push_back(Json::array({i, k}));
  j["edges"] = edges;
  if (m) j["metrics"] = metrics_to_json(*m);
  return j;
}

namespace {

void enumerate_rings(std::int64_t max_size, std::int64_t min_factor,
                     std::vector<std::int64_t>& cur, std::int64_t product,
                     std::vector<std::vector<std::int64_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (std::int64_t n = min_factor; product * n <= max_size; ++n) {
    cur.push_back(n);
    enumerate_rings(max_size, n, cur, product * n, out);
    cur.pop_back();
  }
}

void enumerate_shapes(const std::vector<std::vector<std::int64_t>>& divisors, std::size_t f,
                      std::int64_t min_d, std::int64_t size, std::int64_t max_size,
                      std::vector<std::vector<std::int64_t>>& cur,
                      std::vector<std::vector<std::vector<std::int64_t>>>& out) {
  if (f == divisors.size()) {
    if (size >= 2) out.push_back(cur);
    return;
  }
  // blocks for factor f: nondecreasing divisor multisets, possibly empty
  auto step = [&](auto&& self, std::int64_t lo, std::int64_t sz) -> void {
    // advance to the next factor with the blocks chosen so far
    enumerate_shapes(divisors, f + 1, 2, sz, max_size, cur, out);
    for (auto d : divisors[f]) {
      if (d < lo) continue;
      if (sz * d > max_size) continue;
      cur[f].push_back(d);
      self(self, d, sz * d);
      cur[f].pop_back();
    }
  };
  step(step, min_d, size);
}

} // namespace

std::vector<InstanceSpec> expand_family(const std::string& expr, const Caps& caps) {
  std::vector<InstanceSpec> out;
  auto mk = [&](std::vector<std::int64_t> ring, std::vector<std::vector<std::int64_t>> blocks) {
    InstanceSpec s;
    s.ring = std::move(ring);
    s.blocks = std::move(blocks);
    s.t.kind = TSelector::Kind::Spec;
    s.caps = caps;
    out.push_back(std::move(s));
  };
  if (expr.rfind("zn:", 0) == 0) {
    auto range = expr.substr(3);
    auto dots = range.find("..");
    if (dots == std::string::npos) throw SchemaError("zn family expects zn:A..B");
    std::int64_t a = std::stoll(range.substr(0, dots));
    std::int64_t b = std::stoll(range.substr(dots + 2));
    if (a < 2 || b < a) throw SchemaError("zn range must satisfy 2 <= A <= B");
    for (std::int64_t n = a; n <= b; ++n) mk({n}, {{n}});
    return out;
  }
  if (expr.rfind("products:max=", 0) == 0) {
    std::int64_t cap = std::stoll(expr.substr(13));
    if (cap < 2) throw SchemaError("products cap must be >= 2");
    std::vector<std::vector<std::int64_t>> rings;
    std::vector<std::int64_t> cur;
    enumerate_rings(cap, 2, cur, 1, rings);
    for (const auto& ring : rings) {
      std::vector<std::vector<std::int64_t>> divisors(ring.size());
      for (std::size_t i = 0; i < ring.size(); ++i)
        for (std::int64_t d = 2; d <= ring[i]; ++d)
          if (ring[i] % d == 0) divisors[i].push_back(d);
      std::vector<std::vector<std::int64_t>> blocks(ring.size());
      std::vector<std::vector<std::vector<std::int64_t>>> shapes;
      enumerate_shapes(divisors, 0, 2, 1, cap, blocks, shapes);
      for (auto& shape : shapes) mk(ring, shape);
    }
    return out;
  }
  throw SchemaError("unknown family expression: " + expr +
                    " (expected zn:A..B or products:max=N)");
}

} // namespace ztg
