#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cyleuler/core.hpp"
#include "cyleuler/verification.hpp"

namespace cyleuler {

/// Tensor bump phi(x, t) = b((x - x0)/wx) * b((t - t0)/wt), optionally times
/// the area factor A(x) = 2 pi x.
struct TestFunctionSpec {
  double x_center = 1.0;
  double x_width = 0.5;
  double t_center = 0.1;
  double t_width = 0.08;
  bool weight_by_area = true;
};

struct TestFunctionValue {
  double value = 0.0;
  double dt = 0.0;
  double dx = 0.0;
};

/// Finite linear combination of tensor bumps; derivatives are analytic.
class TestFunction {
 public:
  TestFunction() = default;
  TestFunction(const TestFunctionSpec& spec) { terms_.emplace_back(1.0, spec); }  // NOLINT

  TestFunctionValue operator()(double x, double t) const;
  TestFunction& operator+=(const TestFunction& other);
  friend TestFunction operator+(TestFunction a, const TestFunction& b) { return a += b; }
  friend TestFunction operator*(double k, TestFunction f) {
    for (auto& term : f.terms_) term.first *= k;
    return f;
  }

  /// Bounding box of the support.
  double x_min() const;
  double x_max() const;
  double t_min() const;
  double t_max() const;
  /// Narrowest time width among the terms.
  double min_t_width() const;

 private:
  std::vector<std::pair<double, TestFunctionSpec>> terms_;
};

/// tol_inv = 1e-6 (1 + M3) + 5 dxi.
double invariant_tolerance(const Trajectory& traj);

/// w_bar <= M3 + 2 eps + C t and z_bar >= 0 at every node and snapshot.
VerificationRecord invariant_region_check(const Trajectory& traj);

/// C_b = max((W/2)^c, W, M2), W = M3 + 2 eps + C T.
double physical_bound_constant(const Params& p);

/// 0 <= rho <= C_b x^c, 0 <= m <= C_b rho x, |m_tilde| <= C_b rho x, checked in
/// scaled form.
VerificationRecord physical_bounds_check(const Trajectory& traj);

VerificationRecord omega_maximum_principle(const Trajectory& traj);

/// -1 + theta (d + 1) - theta^2 c - theta; zero whenever c = 1/theta, d = c + 1.
double source_coefficient_defect(const Params& p);

/// Sign conditions of the comparison argument on every stored state:
/// a12 <= 0, R1 part <= 0, R2 part >= theta w_bar^2 / 4.
VerificationRecord source_sign_check(const Trajectory& traj, const Params& p);

double entropy_dissipation_integral(const Trajectory& traj, const TestFunction& tf);

enum class Balance { mass, normal_momentum, angular_momentum };

struct WeakResidual {
  double value = 0.0;
  /// Snapshot spacing exceeds t_width / 40: time quadrature error can dominate.
  bool coarse_in_time = false;
};

WeakResidual weak_residual(const Trajectory& traj, const TestFunction& tf, Balance which);

/// Entropy-inequality tolerance factor C_q in tol = C_q (dxi + eps) * scale.
inline constexpr double kEntropyToleranceFactor = 10.0;

struct EntropyBalance {
  double value = 0.0;  // integral of eta* phi_t + q* phi_x + grad eta* . G phi
  double scale = 0.0;  // same integral with every term in absolute value
};
EntropyBalance entropy_balance(const Trajectory& traj, const TestFunction& tf);

VerificationRecord entropy_inequality_check(const Trajectory& traj, const TestFunction& tf);

struct DecaySlopes {
  double slope_rho = 0.0;
  double slope_m = 0.0;
  double t = 0.0;  // time of the snapshot used
  std::size_t nodes = 0;
};

/// Least-squares slopes of ln rho and ln m against ln x on [x_lo, x_hi] at the
/// snapshot nearest t.
DecaySlopes decay_rate_fit(const Trajectory& traj, double t, double x_lo, double x_hi);

inline constexpr double kPathToleranceFactor = 5.0;
inline constexpr std::size_t kPathSeeds = 20;

/// Transport of x*omega along particle paths dX/dt = u.
VerificationRecord angular_transport_check(const Trajectory& traj,
                                           double c_path = kPathToleranceFactor);

}  // namespace cyleuler
