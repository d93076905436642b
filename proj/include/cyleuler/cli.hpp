#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyleuler/config.hpp"

namespace cyleuler {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitConfig = 2, kExitBlowUp = 3 };

/// Runs the checks named in cfg.checks on a trajectory.
std::vector<VerificationRecord> run_checks(const RunConfig& cfg, const Trajectory& traj);

/// Test functions used by the entropy check: cfg.bumps, or three interior
/// defaults when none are configured.
std::vector<TestFunctionSpec> check_bumps(const RunConfig& cfg);

int cmd_run(const std::string& config_path, const Overrides& o, std::ostream& out,
            std::ostream& err);
int cmd_study(const std::string& config_path, const Overrides& o, std::ostream& out,
              std::ostream& err);
int cmd_verify(const std::string& snapshot_dir, const std::string& config_path,
               const Overrides& o, std::ostream& out, std::ostream& err);

}  // namespace cyleuler
