#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace singgraph {

enum class Errc {
  Parse,
  BadParameters,
  MixedFields,
  SingularMatrix,
  NotNegativeDefinite,
  Disconnected,
  NonTermination,
  NoSuchVertex,
  NoSuchEdge,
  NotSameEdge,
  SearchExhausted,
  DegenerateCycle,
  NotTotallyPositive,
  NotStabilizing,
  NotIntegralNorm,
  NonFinite,
  NotDominant,
  NotEquivariant,
  Internal,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Iteration caps default to `fallback` unless SINGGRAPH_ITER_CAP is set to a
// positive integer.
std::int64_t iteration_cap(std::int64_t fallback);

}  // namespace singgraph
