#include "singgraph/io.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace singgraph {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Parse, what); }

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

int int_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    bad(std::string("'") + key + "' out of range");
  return static_cast<int>(x);
}

std::pair<std::string, std::string> id_pair(const Json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
    bad("an edge must be a pair of vertex ids");
  return {e[0].get<std::string>(), e[1].get<std::string>()};
}

}  // namespace

DualGraph graph_from_json(const Json& j) {
  if (!j.is_object()) bad("graph must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "vertices" && key != "edges") bad("unknown key '" + key + "'");
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("'vertices' must be an array");
  std::vector<Vertex> vertices;
  for (const Json& v : vs) {
    if (!v.is_object()) bad("a vertex must be an object");
    for (const auto& [key, _] : v.items())
      if (key != "id" && key != "self_intersection" && key != "genus" &&
          key != "loops" && key != "mult_override")
        bad("unknown vertex key '" + key + "'");
    Vertex x;
    const Json& id = field(v, "id");
    if (!id.is_string()) bad("'id' must be a string");
    x.id = id.get<std::string>();
    x.self_intersection = int_field(v, "self_intersection");
    x.genus = int_field(v, "genus");
    x.loops = int_field(v, "loops");
    if (v.contains("mult_override")) x.mult_override = int_field(v, "mult_override");
    vertices.push_back(std::move(x));
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const Json& es = j["edges"];
    if (!es.is_array()) bad("'edges' must be an array");
    for (const Json& e : es) {
      auto [a, b] = id_pair(e);
      auto find = [&](const std::string& id) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
          if (vertices[i].id == id) return i;
        bad("edge mentions unknown vertex '" + id + "'");
      };
      edges.push_back({find(a), find(b)});
    }
  }
  try {
    return DualGraph(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    bad(e.what());
  }
}

DualGraph parse_graph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Json graph_to_json(const DualGraph& g) {
  Json vs = Json::array();
  for (const Vertex& v : g.vertices()) {
    Json x = {{"id", v.id},
              {"self_intersection", v.self_intersection},
              {"genus", v.genus},
              {"loops", v.loops}};
    if (v.mult_override) x["mult_override"] = *v.mult_override;
    vs.push_back(std::move(x));
  }
  Json es = Json::array();
  for (const Edge& e : g.edges())
    es.push_back(Json::array({g.vertex(e.u).id, g.vertex(e.v).id}));
  return {{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

std::string emit_graph(const DualGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

Json rationals_to_json(const std::vector<Rat>& xs) {
  Json out = Json::array();
  for (const Rat& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<Rat> rationals_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rat> out;
  for (const Json& x : j) {
    if (x.is_string())
      out.push_back(parse_rat(x.get<std::string>()));
    else if (x.is_number_integer())
      out.push_back(Rat(x.get<std::int64_t>()));
    else
      bad("rationals are written as \"p/q\" strings");
  }
  return out;
}

std::string to_dot(const DualGraph& g, const ExceptionalData* data) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](auto x, auto y) { return g.vertex(x).id < g.vertex(y).id; });

  std::ostringstream os;
  os << "graph dual {\n";
  for (std::size_t i : order) {
    const Vertex& v = g.vertex(i);
    os << "  \"" << v.id << "\" [label=\"" << v.id << "\\n" << v.self_intersection
       << ", g=" << v.genus;
    if (data)
      os << "\\na=" << to_string(data->discrepancy[i])
         << ", A=" << to_string(data->thinness[i]);
    os << "\"];\n";
  }
  std::vector<std::pair<std::string, std::string>> lines;
  for (const Edge& e : g.edges()) {
    auto a = g.vertex(e.u).id, b = g.vertex(e.v).id;
    if (b < a) std::swap(a, b);
    lines.emplace_back(a, b);
  }
  for (const Vertex& v : g.vertices())
    for (int k = 0; k < v.loops; ++k) lines.emplace_back(v.id, v.id);
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) os << "  \"" << a << "\" -- \"" << b << "\";\n";
  os << "}\n";
  return os.str();
}

std::vector<ScriptStep> script_from_json(const Json& j) {
  if (!j.is_array()) bad("a blow-up script is a JSON array of steps");
  std::vector<ScriptStep> steps;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      const Json& s = j[k];
      if (!s.is_object()) bad("a step must be an object");
      const Json& op = field(s, "op");
      const Json& at = field(s, "at");
      ScriptStep step;
      if (op == "free") {
        if (!at.is_string()) bad("a free blow-up is at a vertex id");
        step.vertex = at.get<std::string>();
      } else if (op == "satellite") {
        step.op = ScriptStep::Op::Satellite;
        std::tie(step.vertex, step.other) = id_pair(at);
      } else {
        bad("unknown op " + op.dump());
      }
      steps.push_back(std::move(step));
    } catch (const Error& e) {
      throw ScriptError(k, e);
    }
  }
  return steps;
}

ScriptRun apply_script(const DualGraph& g, const std::vector<ScriptStep>& steps) {
  ScriptRun run{g, {}, {}, true};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const ScriptStep& s = steps[k];
    BlowupResult r;
    try {
      const std::size_t u = run.graph.index_of(s.vertex);
      if (s.op == ScriptStep::Op::Free) {
        r = blow_up_free(run.graph, u);
      } else if (s.vertex == s.other) {
        r = blow_up_node(run.graph, u);
      } else {
        const std::size_t v = run.graph.index_of(s.other);
        auto e = run.graph.find_edge(u, v);
        if (!e)
          throw Error(Errc::NoSuchEdge,
                      "no edge between '" + s.vertex + "' and '" + s.other + "'");
        r = blow_up_satellite(run.graph, *e);
      }
    } catch (const Error& e) {
      throw ScriptError(k, e);
    }
    for (auto& line : r.report.diff(r.graph))
      run.diff.push_back("step " + std::to_string(k) + ": " + line);
    run.consistent = run.consistent && r.report.consistent();
    run.graph = std::move(r.graph);
    run.reports.push_back(std::move(r.report));
  }
  return run;
}

Json cusp_to_json(const CuspData& c) {
  Json extremal = Json::array();
  for (const auto& n : c.extremal) extremal.push_back(n.to_string());
  return {{"epsilon", c.epsilon.to_string()},
          {"period", c.period},
          {"cycle", c.cycle},
          {"extremal", std::move(extremal)},
          {"w", "sqrt(" + std::to_string(c.epsilon.d()) + ")"}};
}

}  // namespace singgraph
