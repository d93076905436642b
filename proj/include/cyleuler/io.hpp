#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cyleuler/solver.hpp"
#include "cyleuler/study.hpp"
#include "cyleuler/verification.hpp"

namespace cyleuler {

/// Column order of every snapshot CSV.
const std::vector<std::string>& snapshot_columns();

/// Writes dir/snapshots/snap_NNNN.csv, one file per stored time.
void write_snapshots(const std::string& dir, const Trajectory& traj);

class SnapshotFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads dir/snapshots back onto make_grid(p.a_eps, p.b_eps, n). The state is
/// taken from rho_bar, m_bar, m_hat; the other columns must be present and
/// parse but are not used. Throws SnapshotFormatError on any mismatch.
Trajectory read_snapshots(const std::string& dir, const Params& p, std::size_t n,
                          double density_floor);

/// Extra per-run values reported alongside the verification records.
struct RunSummary {
  const RunResult* result = nullptr;  // absent for verify-only reports
  const Trajectory* trajectory = nullptr;
  const ResidualReport* cross_check = nullptr;
  std::string command;
};

/// Report JSON text. Timing lives under "metadata" only.
std::string report_json(const RunSummary& summary,
                        const std::vector<VerificationRecord>& records);

std::string epsilon_study_json(const EpsilonStudyReport& r);
std::string grid_study_json(const GridStudyReport& r);
/// Pairwise L1(K) distances: one matrix block per component.
std::string pairwise_csv(const EpsilonStudyReport& r);

void write_text(const std::string& path, const std::string& text);

}  // namespace cyleuler
