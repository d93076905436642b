#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyleuler/core.hpp"
#include "cyleuler/verification.hpp"

namespace cyleuler {

enum class ProfileKind { power_blast, custom_tabulated };

/// How the data meets the inner boundary x = a(eps).
///  - cutoff: momenta multiplied by chi_[2a, b] and the left Dirichlet triple is
///    (rho_bar(a), 0, 0).
///  - inflow: no cutoff; the left Dirichlet triple is the constructed data at a.
///    This is the variant whose boundary data satisfies z >= 0 at x = a.
enum class InnerBoundary { inflow, cutoff };

/// Tabulated raw physical data (x, rho0, u0, omega0), sorted by x.
struct ProfileTable {
  std::vector<double> x;
  std::vector<double> rho0;
  std::vector<double> u0;
  std::vector<double> omega0;
};

ProfileTable read_profile_csv(std::istream& in);
ProfileTable read_profile_csv_file(const std::string& path);

struct InitialProfile {
  ProfileKind kind = ProfileKind::power_blast;
  double beta = 0.1;
  double kappa = 0.05;
  double u_factor = 2.0;
  double cap_radius = 2.0;
  InnerBoundary inner_boundary = InnerBoundary::inflow;
  /// The +eps angular-velocity shift is applied only to data with swirl, so a
  /// swirl-free profile keeps m_hat == 0. Set to shift unconditionally.
  bool shift_angular_without_swirl = false;
  ProfileTable table;  // custom_tabulated only
};

/// kappa != 0 (power blast) or any nonzero tabulated omega0.
bool has_swirl(const InitialProfile& profile);

/// Raw (pre-mollification) physical state at one radius.
struct RawState {
  double rho;
  double u;      // normal velocity m/rho
  double omega;  // angular velocity m_tilde/rho
};

RawState evaluate_profile(const InitialProfile& profile, double x, const Params& p);

/// Raw data sampled on the grid as a PhysicalField (input to check_admissibility).
PhysicalField raw_physical(const InitialProfile& profile, const Grid& grid, const Params& p);

struct MollifierOptions {
  /// Support radius in xi. Non-positive selects max(epsilon, 2 dxi).
  double radius = 0.0;
};

/// Discrete unit-mass weights w[k], k = -K..K (stored at index k + K).
std::vector<double> mollifier_weights(double radius, double dxi);

ScaledField build_initial_data(const InitialProfile& profile, const Grid& grid, const Params& p,
                               const MollifierOptions& opts = {});

/// Checks the raw-data hypotheses rho0 >= 0, m0/rho0 + rho0^theta <= M1 x,
/// m0/rho0 - rho0^theta >= 0, |m_tilde0/rho0| <= M2 x. Reports, never throws.
VerificationRecord check_admissibility(const PhysicalField& f, const Grid& grid, const Params& p);

/// Scaled-form hypotheses on the constructed data: rho_bar >= eps^(2/theta),
/// w_bar <= M3 + 2 eps, z_bar >= 0, |omega_hat| <= M2 + eps.
VerificationRecord check_constructed_data(const ScaledField& s0, const Grid& grid,
                                          const Params& p);

using StateTriple = std::array<double, 3>;

struct BoundaryData {
  StateTriple left;
  StateTriple right;
};

BoundaryData boundary_values(const ScaledField& s0, const Params& p,
                             InnerBoundary mode = InnerBoundary::inflow);

}  // namespace cyleuler
