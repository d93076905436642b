#pragma once

#include <cstddef>
#include <vector>

namespace cyleuler {

/// Scalar constants of the problem. Built through derive_params so the derived
/// exponents always satisfy c*theta = 1 and d = c + 1.
struct Params {
  double gamma = 2.0;
  double theta = 0.5;   // (gamma - 1) / 2
  double c = 2.0;       // 1 / theta
  double d = 3.0;       // c + 1
  double p0 = 0.125;    // theta^2 / gamma
  double epsilon = 2e-3;
  double a_eps = 0.0;   // -1 / ln(epsilon)
  double b_eps = 10.0;
  double t_final = 0.2;
  double m1 = 1.0;
  double m2 = 0.1;
  double m3 = 0.0;
  double c_ctrl = 1.0;  // slope of the control function, >= m2^2

  /// Initial density floor eps^(2/theta) added to the data.
  double initial_floor() const;
  double pressure(double rho) const;
};

Params derive_params(double gamma, double epsilon, double b_eps, double t_final,
                     double m1, double m2, double m3 = 0.0);

/// b(eps) = min(b_max, 1/eps).
double default_outer_radius(double epsilon, double b_max = 10.0);

/// Uniform mesh in xi = ln x.
struct Grid {
  std::size_t n = 0;
  double dxi = 0.0;
  std::vector<double> xi;
  std::vector<double> x;

  std::size_t size() const { return n; }
};

Grid make_grid(double a, double b, std::size_t n);

/// Solver state in the scaled variables rho = rho_bar x^c, m = m_bar x^d,
/// m_tilde = m_hat x^d.
struct ScaledField {
  std::vector<double> rho_bar;
  std::vector<double> m_bar;
  std::vector<double> m_hat;

  ScaledField() = default;
  explicit ScaledField(std::size_t n) : rho_bar(n), m_bar(n), m_hat(n) {}
  std::size_t size() const { return rho_bar.size(); }
};

struct PhysicalField {
  std::vector<double> rho;
  std::vector<double> m;
  std::vector<double> m_tilde;
  std::vector<double> u;
  std::vector<double> u_tilde;

  std::size_t size() const { return rho.size(); }
};

struct Invariants3 {
  std::vector<double> w_bar;
  std::vector<double> z_bar;
  std::vector<double> omega_hat;
  std::vector<double> lam1;
  std::vector<double> lam2;
  std::vector<double> lam3;
};

/// Time-ordered snapshots of one run.
struct Trajectory {
  Params params;
  Grid grid;
  std::vector<double> times;
  std::vector<ScaledField> snapshots;
  double density_floor = 0.0;
  std::size_t clip_events = 0;

  std::size_t size() const { return times.size(); }
};

PhysicalField scale_to_physical(const ScaledField& s, const Grid& grid, const Params& p);
ScaledField physical_to_scaled(const PhysicalField& f, const Grid& grid, const Params& p);

/// Builds a PhysicalField from (rho, m, m_tilde); velocities are m/rho and
/// m_tilde/rho where rho > 0 and 0 at vacuum.
PhysicalField make_physical(std::vector<double> rho, std::vector<double> m,
                            std::vector<double> m_tilde);

/// Throws std::domain_error if rho_bar <= 0 or falls below density_floor.
Invariants3 riemann_invariants(const ScaledField& s, const Params& p,
                               double density_floor = 0.0);

struct EntropyPair {
  std::vector<double> eta;
  std::vector<double> q;
};

EntropyPair mechanical_entropy(const PhysicalField& f, const Params& p);

// Pointwise forms, shared by the array operations and the diagnostics.
namespace pointwise {

double eta_star(double rho, double m, double mt, const Params& p);
double q_star(double rho, double m, double mt, const Params& p);

/// Gradient of eta* in (rho, m, m_tilde).
struct EtaGradient {
  double d_rho;
  double d_m;
  double d_mt;
};
EtaGradient eta_star_gradient(double rho, double m, double mt, const Params& p);

}  // namespace pointwise

}  // namespace cyleuler
