// singgraph: command-line front end.
//
// Exit codes:
//   0  success
//   1  internal error (including a failed self-check)
//   2  unreadable or malformed input
//   3  intersection form not negative definite
//   4  bad blow-up script step
//   5  cusp input rejected (alpha not totally positive, not stabilizing N, ...)
//   6  disconnected graph
//   7  bad parameters (non-dominant or non-finite map, invalid n, q, d, ...)
//   8  map not equivariant for the group
//   9  search or iteration cap exhausted (see SINGGRAPH_ITER_CAP)
//   64 command-line usage

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "singgraph/cusp.hpp"
#include "singgraph/endo.hpp"
#include "singgraph/io.hpp"
#include "singgraph/valuation.hpp"

using namespace singgraph;

namespace {

enum Exit {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kNotNegDef = 3,
  kScript = 4,
  kCusp = 5,
  kDisconnected = 6,
  kBadParams = 7,
  kNotEquivariant = 8,
  kExhausted = 9,
  kUsage = 64,
};

int exit_code(Errc c) {
  switch (c) {
    case Errc::Parse: return kParse;
    case Errc::NotNegativeDefinite:
    case Errc::SingularMatrix: return kNotNegDef;
    case Errc::NoSuchVertex:
    case Errc::NoSuchEdge:
    case Errc::NotSameEdge: return kScript;
    case Errc::NotTotallyPositive:
    case Errc::NotStabilizing:
    case Errc::NotIntegralNorm:
    case Errc::DegenerateCycle: return kCusp;
    case Errc::Disconnected: return kDisconnected;
    case Errc::BadParameters:
    case Errc::MixedFields:
    case Errc::NonFinite:
    case Errc::NotDominant: return kBadParams;
    case Errc::NotEquivariant: return kNotEquivariant;
    case Errc::SearchExhausted:
    case Errc::NonTermination: return kExhausted;
    case Errc::Internal: return kInternal;
  }
  return kInternal;
}

struct Flags {
  bool dot = false;
  bool json = false;
  bool quiet = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (c == sep)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::string human_verdict(Verdict v) {
  switch (v) {
    case Verdict::Klt: return "KLT";
    case Verdict::LcSimpleElliptic: return "LC (simple elliptic)";
    case Verdict::LcCusp: return "LC (cusp)";
    case Verdict::LcQuotientOfLc: return "LC (quotient of a simple elliptic or cusp)";
    case Verdict::NotLc: return "NOT LC";
  }
  return "?";
}

// Throws NotNegativeDefinite naming the failing minor.
void check_graph(const DualGraph& g) {
  if (!g.connected()) throw Error(Errc::Disconnected, "the dual graph is disconnected");
  const auto r = negative_definite_report(g);
  if (!r.negative_definite)
    throw Error(Errc::NotNegativeDefinite,
                "intersection form is not negative definite: leading principal minor " +
                    std::to_string(r.failing_minor) + " of -M equals " +
                    to_string(r.failing_value));
}

std::string describe_places(const DualGraph& g, const LcPlaces& p) {
  std::string s = to_string(p.kind);
  if (p.vertices.empty() || p.kind == LcPlaces::Kind::WholeGraph) return s;
  s += ":";
  for (std::size_t i : p.vertices) s += " " + g.vertex(i).id;
  return s;
}

int cmd_classify(const std::string& path, const Flags& f) {
  const DualGraph g = parse_graph(read_file(path));
  check_graph(g);
  const ExceptionalData data = analyze(g);
  const Classification c = classify(g);

  if (f.dot) {
    std::cout << to_dot(g, &data);
  } else if (f.json) {
    Json vs = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
      vs.push_back({{"id", g.vertex(i).id},
                    {"a", to_string(data.discrepancy[i])},
                    {"b", data.multiplicity[i]},
                    {"A", to_string(data.thinness[i])}});
    Json places = Json::array();
    for (std::size_t i : c.lc_places.vertices) places.push_back(g.vertex(i).id);
    Json out = {{"verdict", to_string(c.verdict)},
                {"min_thinness", to_string(c.min_thinness)},
                {"lc_places", {{"kind", to_string(c.lc_places.kind)}, {"vertices", places}}},
                {"vertices", vs},
                {"warnings", c.warnings}};
    std::cout << out.dump(2) << "\n";
  } else if (!f.quiet) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vertex& v = g.vertex(i);
      std::cout << v.id << ": E^2 = " << v.self_intersection << ", genus " << v.genus
                << ", loops " << v.loops << ", a = " << to_string(data.discrepancy[i])
                << ", b = " << data.multiplicity[i]
                << ", A = " << to_string(data.thinness[i]) << "\n";
    }
    std::cout << human_verdict(c.verdict) << ", min A = " << to_string(c.min_thinness)
              << "\n";
    std::cout << "A = 0 on: " << describe_places(g, c.lc_places) << "\n";
    for (const auto& w : c.warnings) std::cout << "warning: " << w << "\n";
  }
  return kOk;
}

int cmd_blowup(const std::string& graph_path, const std::string& script_path,
               const std::string& out_path, const Flags& f) {
  const DualGraph g = parse_graph(read_file(graph_path));
  Json script;
  try {
    script = Json::parse(read_file(script_path));
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, std::string("invalid script JSON: ") + e.what());
  }
  const auto steps = script_from_json(script);
  check_graph(g);
  const ScriptRun run = apply_script(g, steps);

  const std::string emitted = f.dot ? to_dot(run.graph) : emit_graph(run.graph);
  std::ostream* report = &std::cout;
  if (out_path.empty()) {
    std::cout << emitted;
    report = &std::cerr;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(Errc::Parse, "cannot write '" + out_path + "'");
    out << emitted;
  }
  if (!f.quiet) {
    *report << "applied " << steps.size() << " step(s); transport diff: "
            << (run.consistent ? "empty" : "NON-EMPTY") << "\n";
    for (const auto& line : run.diff) *report << "  " << line << "\n";
  }
  if (!run.consistent) {
    std::cerr << "error: transported invariants disagree with recomputed ones\n";
    return kInternal;
  }
  return kOk;
}

QuadLattice make_lattice(std::int64_t d, const std::string& omega) {
  if (d < 2 || !is_square_free(d))
    throw Error(Errc::BadParameters, "--d must be square-free and >= 2");
  if (omega == "sqrt") return QuadLattice::sqrt_order(d);
  if (omega == "half") return QuadLattice::half_order(d);
  return QuadLattice(d, QuadElem::parse(omega, d));
}

int cmd_cusp(std::int64_t d, const std::string& omega, const std::string& alpha_text,
             bool emit_graph_json, const Flags& f) {
  const QuadLattice lattice = make_lattice(d, omega);
  const CuspData c = klein_polygon(lattice);
  const DualGraph g = cusp_dual_graph(c.cycle);

  std::optional<QuadElem> alpha;
  std::optional<RotationNumber> rho;
  Int degree;
  if (!alpha_text.empty()) {
    alpha = QuadElem::parse(alpha_text, d);
    rho = rotation_number(lattice, *alpha);
    degree = topological_degree(*alpha);
  }

  if (f.dot) {
    std::cout << to_dot(g, nullptr);
    return kOk;
  }
  if (f.json) {
    Json out = cusp_to_json(c);
    if (alpha) {
      out["alpha"] = alpha->to_string();
      out["degree"] = degree.str();
      out["rotation"] = rho->rational ? to_string(*rho->value) : "irrational";
    }
    if (emit_graph_json) out["graph"] = graph_to_json(g);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  if (emit_graph_json) {
    std::cout << emit_graph(g);
    return kOk;
  }
  if (f.quiet) return kOk;
  std::cout << "N = Z + Z*(" << lattice.omega().to_string() << "), w = sqrt(" << d
            << ")\n";
  std::cout << "epsilon = " << c.epsilon.to_string() << "\n";
  std::cout << "period = " << c.period << "\n";
  std::cout << "cycle = (";
  for (std::size_t k = 0; k < c.cycle.size(); ++k)
    std::cout << (k ? ", " : "") << c.cycle[k];
  std::cout << ")\n";
  std::cout << "extremal points:";
  for (const auto& n : c.extremal) std::cout << " " << n.to_string();
  std::cout << "\n";
  if (alpha) {
    std::cout << "alpha = " << alpha->to_string() << ", degree N(alpha) = " << degree
              << "\n";
    std::cout << "rotation number: " << rho->description << "\n";
    std::cout << "JF is empty: F_alpha is unramified off the singular point\n";
  }
  return kOk;
}

int cmd_cyclic(std::int64_t n, std::int64_t q, const Flags& f) {
  const DualGraph g = cyclic_quotient_graph(n, q);
  if (f.dot) {
    std::cout << to_dot(g, nullptr);
  } else if (f.json) {
    std::cout << emit_graph(g);
  } else if (!f.quiet) {
    const auto hj = hirzebruch_jung(n, q);
    std::cout << n << "/" << q << " = [";
    for (std::size_t k = 0; k < hj.size(); ++k) std::cout << (k ? ", " : "") << hj[k];
    std::cout << "]\n" << emit_graph(g);
  }
  return kOk;
}

std::optional<CyclicGroup> parse_group(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(Errc::Parse, "expected n,q");
  auto to_int = [](const std::string& s) {
    const Rat r = parse_rat(s);
    if (!is_integer(r)) throw Error(Errc::Parse, "not an integer: '" + s + "'");
    return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
  };
  return make_cyclic_group(to_int(parts[0]), to_int(parts[1]));
}

int cmd_verify_jacobian(const std::string& map, const std::string& weights,
                        const std::string& group, const Flags& f) {
  const MonomialMap F = MonomialMap::parse(map, parse_group(group));
  const auto w = split(weights, ',');
  if (w.size() != 2) throw Error(Errc::Parse, "expected --weights s,t");
  const MonoVal v = make_monoval(parse_rat(w[0]), parse_rat(w[1]));
  const MonoVal pushed = push_valuation(F, v);
  const JacobianDivisor jf = jacobian_divisor(F);
  const JacobianReport r = verify_jacobian_formula(F, v);
  const Rat rate = contraction_rate(F, normalize(v, std::nullopt));

  if (f.json) {
    Json out = {{"map", F.to_string()},
                {"pushed", {to_string(pushed.s), to_string(pushed.t)}},
                {"jacobian", {{"coefficient", jf.coefficient}, {"ex", jf.ex}, {"ey", jf.ey}}},
                {"lhs", to_string(r.lhs)},
                {"rhs", to_string(r.rhs)},
                {"equal", r.equal},
                {"contraction_rate", to_string(rate)}};
    std::cout << out.dump(2) << "\n";
  } else if (!f.quiet) {
    std::cout << "F = " << F.to_string() << ", e = " << F.topological_degree() << "\n";
    std::cout << "F_* nu = (" << to_string(pushed.s) << ", " << to_string(pushed.t)
              << ")\n";
    std::cout << "JF = " << jf.coefficient << " * x^" << jf.ex << " y^" << jf.ey
              << (jf.empty() ? " (empty)" : "") << "\n";
    std::cout << "A(F_* nu) = " << to_string(r.lhs) << "\n";
    std::cout << "A(nu) + nu(JF) = " << to_string(r.rhs) << "\n";
    std::cout << "c(F, nu) = " << to_string(rate) << " (nu normalized)\n";
    std::cout << (r.equal ? "equal" : "NOT EQUAL") << "\n";
  }
  return r.equal ? kOk : kInternal;
}

int cmd_theoremb(const std::string& group, const std::string& map, const Flags& f) {
  const auto g = parse_group(group);
  if (!g) throw Error(Errc::Parse, "--group n,q is required");
  const MonomialMap F = MonomialMap::parse(map, g);
  const TheoremBReport r = theoremB_case(F);
  if (f.json) {
    Json out = {{"degree", r.degree},
                {"trace", r.trace},
                {"det", r.det},
                {"jacobian_empty", r.jacobian.empty()},
                {"case", r.which == TheoremBReport::Case::Invertible ? "invertible"
                                                                    : "jacobian_nonempty"},
                {"quotient_verdict", to_string(r.quotient_verdict)},
                {"klt_confirmed", r.klt_confirmed}};
    std::cout << out.dump(2) << "\n";
  } else if (!f.quiet) {
    std::cout << "F = " << F.to_string() << " on (1/" << g->n << ")(1," << g->q << ")\n";
    std::cout << r.description << "\n";
  }
  if (r.which == TheoremBReport::Case::JacobianNonEmpty && !r.klt_confirmed)
    return kInternal;
  return kOk;
}

int cmd_skew(std::int64_t fiber, std::int64_t base, const Flags& f) {
  const SkewDegrees s = skew_degrees(fiber, base);
  if (f.json)
    std::cout << Json{{"e", s.e}, {"lambda", s.lambda}}.dump() << "\n";
  else if (!f.quiet)
    std::cout << "e = " << s.e << ", lambda = " << s.lambda << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of normal surface singularities from dual graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_flag("--dot", flags.dot, "Emit a DOT rendering");
  app.add_flag("--json", flags.json, "Emit JSON");
  app.add_flag("--quiet,-q", flags.quiet, "Suppress the human-readable report");

  std::string graph_path, script_path, out_path;
  auto* classify_cmd = app.add_subcommand("classify", "Discrepancies, thinness, klt/lc verdict");
  classify_cmd->add_option("graph", graph_path, "Graph JSON file")->required();

  auto* blowup_cmd = app.add_subcommand("blowup", "Apply a blow-up script");
  blowup_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
  blowup_cmd->add_option("script", script_path, "Script JSON file")->required();
  blowup_cmd->add_option("-o,--output", out_path, "Write the new graph here");

  std::int64_t d = 0;
  std::string omega = "sqrt", alpha;
  bool cusp_graph = false;
  auto* cusp_cmd = app.add_subcommand("cusp", "Cusp singularity of a quadratic lattice");
  cusp_cmd->add_option("--d", d, "Square-free d >= 2")->required();
  cusp_cmd->add_option("--omega", omega, "sqrt, half, or an element p+qw");
  cusp_cmd->add_option("--alpha", alpha, "Totally positive alpha with alpha N in N");
  cusp_cmd->add_flag("--graph", cusp_graph, "Emit the dual graph JSON");

  std::int64_t n = 0, q = 0;
  auto* cyclic_cmd = app.add_subcommand("cyclic", "Resolution graph of (1/n)(1,q)");
  cyclic_cmd->add_option("--n", n)->required();
  cyclic_cmd->add_option("--q", q)->required();

  std::string map, weights, group;
  auto* jac_cmd = app.add_subcommand("verify-jacobian", "Check A(F_* nu) = A(nu) + nu(JF)");
  jac_cmd->add_option("--map", map, "a,b,c,d for (x^a y^b, x^c y^d)")->required();
  jac_cmd->add_option("--weights", weights, "s,t")->required();
  jac_cmd->add_option("--group", group, "n,q");

  auto* thb_cmd = app.add_subcommand("theoremb", "Dichotomy for an equivariant monomial map");
  thb_cmd->add_option("--group", group, "n,q")->required();
  thb_cmd->add_option("--map", map, "a,b,c,d")->required();

  std::int64_t fiber = 0, base = 0;
  auto* skew_cmd = app.add_subcommand("skew", "Degrees of a skew product");
  skew_cmd->add_option("--fiber", fiber)->required();
  skew_cmd->add_option("--base", base)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(graph_path, flags);
    if (*blowup_cmd) return cmd_blowup(graph_path, script_path, out_path, flags);
    if (*cusp_cmd) return cmd_cusp(d, omega, alpha, cusp_graph, flags);
    if (*cyclic_cmd) return cmd_cyclic(n, q, flags);
    if (*jac_cmd) return cmd_verify_jacobian(map, weights, group, flags);
    if (*thb_cmd) return cmd_theoremb(group, map, flags);
    if (*skew_cmd) return cmd_skew(fiber, base, flags);
  } catch (const ScriptError& e) {
    std::cerr << "error: blow-up script " << e.what() << "\n";
    return kScript;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
