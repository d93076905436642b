#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cyleuler/diagnostics.hpp"
#include "cyleuler/initial_data.hpp"
#include "cyleuler/solver.hpp"

namespace cyleuler {

/// K = [x_lo, x_hi] x [t_lo, t_hi].
struct CompactSet {
  double x_lo = 0.3;
  double x_hi = 3.0;
  double t_lo = 0.05;
  double t_hi = 0.2;
};

struct StudyPlan {
  std::vector<double> epsilons;          // decreasing, each half the previous
  std::vector<std::size_t> grid_sizes;   // each double the previous
  CompactSet compact_set;
  InitialProfile profile;
  SolverConfig base_config;

  double gamma = 2.0;
  double b_max = 10.0;
  double t_final = 0.2;
  double m1 = 1.0;
  double m2 = 0.1;

  /// Grid study: eps halves along with each doubling of n when set,
  /// otherwise eps = epsilons.front() throughout.
  bool refine_epsilon_with_grid = false;
  TestFunctionSpec dissipation_bump{2.0, 0.5, 0.1, 0.08, false};
  std::vector<TestFunctionSpec> weak_bumps;
};

/// Throws std::invalid_argument listing every violation. `need_grid` selects the
/// grid-refinement preconditions instead of the epsilon-study ones.
void validate_plan(const StudyPlan& plan, bool need_grid);

Params study_params(const StudyPlan& plan, double epsilon);

/// Worker count: CYL_EULER_THREADS if set and positive, else hardware threads.
unsigned study_threads();

/// Mesh uniform in xi covering [x_lo, x_hi] with spacing at most dxi.
std::vector<double> common_mesh(double x_lo, double x_hi, double dxi);

/// Linear interpolation in xi of `v` (given on grid) at the mesh points; exact at
/// grid nodes.
std::vector<double> interpolate_xi(const Grid& grid, const std::vector<double>& v,
                                   const std::vector<double>& mesh_xi);

/// Physical fields (rho, m, m_tilde) of `traj` on the mesh at time t, linear in t
/// between the bracketing snapshots.
std::array<std::vector<double>, 3> sample_physical(const Trajectory& traj, double t,
                                                   const std::vector<double>& mesh_xi);

struct Distance {
  std::array<double, 3> l1{};    // rho, m, m_tilde
  std::array<double, 3> linf{};
};

/// L1(K) and Linf(K) distance of two trajectories in physical variables.
Distance distance_on(const Trajectory& a, const Trajectory& b, const CompactSet& k,
                     double mesh_dxi);

struct StudyRun {
  double epsilon = 0.0;
  std::size_t n = 0;
  double dissipation = 0.0;
  double wall_time_s = 0.0;
  std::size_t clip_events = 0;
  std::vector<VerificationRecord> verifications;
};

struct EpsilonStudyReport {
  std::vector<StudyRun> runs;
  std::vector<Distance> deltas;  // deltas[k] = |v(eps_k) - v(eps_{k+1})|
  std::array<bool, 3> decreasing{};
  /// pairwise[c][i][j]: L1(K) distance of component c between runs i and j.
  std::array<std::vector<std::vector<double>>, 3> pairwise;
  bool all_decreasing = false;
  bool verifications_passed = false;
};

EpsilonStudyReport epsilon_study(const StudyPlan& plan);

struct GridStudyReport {
  std::vector<StudyRun> runs;
  std::vector<Distance> differences;        // consecutive-run self differences
  std::vector<std::array<double, 3>> orders;  // log2 ratios of consecutive L1 differences
  std::vector<ResidualReport> cross_check;  // one per run
  std::vector<std::array<double, 3>> cross_check_orders;
  /// weak[r][b][balance] for run r and bump b.
  std::vector<std::vector<std::array<double, 3>>> weak;
  std::vector<std::vector<std::array<double, 3>>> weak_orders;  // per consecutive pair
  bool degenerate = false;  // differences at round-off: orders meaningless
  bool verifications_passed = false;
};

GridStudyReport grid_refinement_study(const StudyPlan& plan);

/// The per-run checks used by studies and the CLI.
std::vector<VerificationRecord> trajectory_checks(const Trajectory& traj);

}  // namespace cyleuler
