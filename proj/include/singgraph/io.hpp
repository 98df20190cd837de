#pragma once

// JSON and DOT serialization. Rationals are written as "p/q" strings and
// quadratic elements as "p+qw" strings; object keys come out sorted, so
// emit -> parse -> emit is stable.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "singgraph/blowup.hpp"
#include "singgraph/cusp.hpp"
#include "singgraph/graph.hpp"

namespace singgraph {

using Json = nlohmann::json;

/// {"vertices":[{"id","self_intersection","genus","loops","mult_override"?}],
///  "edges":[["id","id"], ...]}. An edge ["v","v"] is a loop at v.
/// Throws Errc::Parse on any schema violation.
DualGraph graph_from_json(const Json& j);
DualGraph parse_graph(std::string_view text);
Json graph_to_json(const DualGraph& g);
std::string emit_graph(const DualGraph& g);

Json rationals_to_json(const std::vector<Rat>& xs);
std::vector<Rat> rationals_from_json(const Json& j);

/// Vertices sorted by id, labelled with self-intersection and genus, plus
/// a and A when data is given.
std::string to_dot(const DualGraph& g, const ExceptionalData* data = nullptr);

/// A blow-up script step: {"op":"free","at":"E"} or
/// {"op":"satellite","at":["E","F"]}. A satellite step at ["E","E"] blows up
/// the node of a nodal curve E.
struct ScriptStep {
  enum class Op { Free, Satellite };
  Op op = Op::Free;
  std::string vertex;
  std::string other;
};

/// An error raised while interpreting step `step` of a script.
class ScriptError : public Error {
 public:
  ScriptError(std::size_t step, const Error& cause)
      : Error(cause.code(), "step " + std::to_string(step) + ": " + cause.what()),
        step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// The script must be a JSON array (Errc::Parse otherwise); malformed steps
/// raise ScriptError.
std::vector<ScriptStep> script_from_json(const Json& j);

struct ScriptRun {
  DualGraph graph;
  std::vector<TransportReport> reports;
  /// Mismatch lines of every step, prefixed by the step index.
  std::vector<std::string> diff;
  bool consistent = true;
};

ScriptRun apply_script(const DualGraph& g, const std::vector<ScriptStep>& steps);

/// {"cycle","epsilon","extremal","period","w"}; "w" names sqrt(d).
Json cusp_to_json(const CuspData& c);

}  // namespace singgraph
