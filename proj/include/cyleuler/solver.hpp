#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyleuler/core.hpp"
#include "cyleuler/initial_data.hpp"

namespace cyleuler {

enum class Integrator { explicit_ssp2, imex_diffusion };

struct SolverConfig {
  std::size_t n = 2048;
  double cfl = 0.4;
  double diff_number = 0.25;
  double snapshot_dt = 0.0;    // <= 0 selects t_final / 50
  double density_floor = 0.0;  // <= 0 selects eps^(2/theta) * 1e-4
  Integrator integrator = Integrator::explicit_ssp2;
  MollifierOptions mollifier;
};

/// Throws std::invalid_argument naming every violated SolverConfig constraint.
void validate(const SolverConfig& cfg);
double resolved_density_floor(const SolverConfig& cfg, const Params& p);
double resolved_snapshot_dt(const SolverConfig& cfg, const Params& p);

/// Non-finite state detected; `t` is NaN when raised outside a run.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double t, std::size_t node)
      : std::runtime_error(what), t_(t), node_(node) {}
  double time() const { return t_; }
  std::size_t node() const { return node_; }

 private:
  double t_;
  std::size_t node_;
};

/// Semi-discrete right-hand side of the viscous scaled system in xi: Rusanov
/// flux divergence, geometric sources and eps * second difference. Boundary
/// nodes get a zero increment (they carry Dirichlet data).
ScaledField rhs(const ScaledField& s, const Grid& grid, const Params& p);

/// Same operator without the eps-diffusion (used by the IMEX split).
ScaledField rhs_hyperbolic(const ScaledField& s, const Grid& grid, const Params& p);

/// Interface fluxes (size n-1) of the Rusanov scheme, component-major.
struct InterfaceFluxes {
  std::vector<double> rho;
  std::vector<double> m;
  std::vector<double> mh;
};
InterfaceFluxes rusanov_fluxes(const ScaledField& s, const Params& p);

/// Solves (I - coef * second difference) v = u on the interior nodes, end values
/// held fixed; u is overwritten with v. Thomas algorithm.
void backward_euler_diffusion(std::vector<double>& u, double coef);

double stable_dt(const ScaledField& s, const Grid& grid, const Params& p, const SolverConfig& cfg);

/// One time step with Dirichlet data re-imposed after every stage; rho_bar is
/// clipped at the density floor and each clip is added to `clip_events`.
ScaledField step(const ScaledField& s, double dt, const Grid& grid, const Params& p,
                 const SolverConfig& cfg, const BoundaryData& bc, std::size_t& clip_events);

struct SnapshotExtrema {
  double t;
  double w_max, w_min;
  double z_max, z_min;
  double omega_max, omega_min;
  double rho_max, rho_min;
};

struct RunResult {
  Trajectory trajectory;
  BoundaryData boundary;
  std::vector<SnapshotExtrema> extrema;
  std::size_t steps = 0;
  std::size_t node_steps = 0;
  /// Clip events exceeded 0.1% of node-steps: positivity is failing numerically.
  bool positivity_flag = false;
  /// max component |left Dirichlet triple - first interior node| at t = 0.
  double corner_jump = 0.0;
  double wall_time_s = 0.0;
};

/// Integrates from t = 0 to t_final. M3 is resolved as max over nodes of w_bar0.
RunResult run(const InitialProfile& profile, const Params& p, const SolverConfig& cfg);

SnapshotExtrema snapshot_extrema(const ScaledField& s, const Params& p, double t);

struct ResidualReport {
  std::array<double, 3> l1{};    // rho, m, m_tilde equations
  std::array<double, 3> linf{};
};

/// Residual of the equivalent physical-coordinate viscous system evaluated on
/// the snapshots by centred differences in x and t.
ResidualReport cross_check_physical(const Trajectory& traj);

}  // namespace cyleuler
