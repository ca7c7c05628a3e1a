#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "idexp/pair.hpp"

namespace idexp {

// One chart of a blow-up in a coordinate center. A single-variable center is
// the divisorial case (no substitution, only the exceptional division).
struct BlowupStep {
  std::vector<std::string> center;
  std::string chart;  // must be one of the center variables
};

struct AdjoinStep {
  std::string name;
};

using ScriptStep = std::variant<AdjoinStep, BlowupStep>;

// Local sequence of blow-ups over the polynomial model: optional adjunctions
// of fresh variables followed by chart-wise blow-ups in coordinate centers.
struct LSBScript {
  std::vector<ScriptStep> steps;
};

struct TransformResult {
  bool permissible;
  std::optional<Pair> image;  // weight power-cleared to an integer if needed
};

// Controlled transform of (J, b) in the given chart: permissible iff the
// ideal order along the center is >= b; then substitutes w -> chart * w for
// the other center variables and divides every generator by chart^b exactly.
TransformResult transform_blowup(const Pair& p, const BlowupStep& step);

struct LsbStepRecord {
  int index;
  std::string description;
  std::vector<bool> permissible;  // one verdict per component
  bool executed;
};

struct LsbTrace {
  PairSystem final_system;          // state after the last executed step
  std::vector<LsbStepRecord> steps;
  int stop_index;                   // == steps.size() when fully executed
  bool completed;
};

// Runs the script, stopping at the first step that is impermissible for any
// component. Adjoined variables must be fresh; centers must name existing
// variables and contain the chart.
LsbTrace run_lsb(const PairSystem& s, const LSBScript& script);

// Adjoin t, blow up the full origin alpha times (t-chart each time), then the
// divisorial center (t) beta times.
LSBScript s_alpha_beta(const VarSplit& split, int alpha, int beta,
                       const std::string& tname = "t");

struct ProbeResult {
  bool witness_found = false;
  int permissible_for = -1;  // index (0/1) of the input the witness is permissible for
  LSBScript script;
  std::vector<std::string> notes;
  long scripts_examined = 0;
};

// Bounded one-sided search for a script permissible for exactly one of the
// two systems. Tries the order-gap guided adjoin/blow-up family first, then a
// depth-first search over coordinate-center scripts with up to `extensions`
// adjoined variables and `depth` blow-ups. Absence of a witness proves
// nothing; the result says "no witness found", never "equivalent".
ProbeResult probe_equiv(const PairSystem& a, const PairSystem& b, int depth, int extensions);

// A variable name not used by the split: base, then base2, base3, ...
std::string fresh_name(const VarSplit& split, const std::string& base);

}  // namespace idexp
