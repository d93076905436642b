#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyleuler/diagnostics.hpp"
#include "cyleuler/initial_data.hpp"
#include "cyleuler/solver.hpp"
#include "cyleuler/study.hpp"

namespace cyleuler {

/// Text config: one `section.key = value` per line, `#` starts a comment.
struct RunConfig {
  // physics.*
  double gamma = 2.0;
  double epsilon = 2e-3;
  double b_max = 10.0;
  double t_final = 0.2;
  double m1 = 1.0;
  double m2 = 0.1;

  InitialProfile profile;  // profile.*
  std::string profile_table;
  SolverConfig solver;     // solver.*
  std::string output_dir = "out";

  /// verify.checks: names from available_checks(). Default: all of them.
  std::vector<std::string> checks;
  /// verify.bump.N.{x_center,x_width,t_center,t_width}: entropy-inequality and
  /// weak-residual test functions.
  std::vector<TestFunctionSpec> bumps;

  // study.*
  bool has_study = false;
  std::string study_kind = "epsilon";  // epsilon | grid | both
  std::vector<double> study_epsilons;
  std::vector<std::size_t> study_grid_sizes;
  CompactSet compact_set;
  bool refine_epsilon_with_grid = false;
};

const std::vector<std::string>& available_checks();

struct Overrides {
  std::optional<double> gamma;
  std::optional<double> epsilon;
  std::optional<std::size_t> nx;
  std::optional<double> t_final;
};

/// Thrown for any config problem; what() lists every violation.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses without semantic validation; unknown keys and malformed values are
/// collected and thrown together.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

void apply_overrides(RunConfig& cfg, const Overrides& o);

/// Full validation, aggregated into one ConfigError. Loads the profile table.
void validate_config(RunConfig& cfg, bool need_study = false);

Params config_params(const RunConfig& cfg);
StudyPlan config_study_plan(const RunConfig& cfg);

}  // namespace cyleuler
