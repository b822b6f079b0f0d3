#pragma once

// Orthogonal reparametrization of the class A slices: kappa = kappa(t, phi)
// chosen so that the profile (r, z)(t, phi) moves normal to itself,
// r_t r_phi + z_t z_phi = 0. That condition fixes
//
//   kappa_t = 2 kappa (2t - f + kappa f') / ((2t - f - kappa f')^2 + 4 kappa (2t - f)).
//
// The gauge label phi is the initial value kappa(t0).

#include "zmc/slices.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace zmc::ong {

using Rhs = std::function<double(double t, double kappa, const slices::Profile& profile)>;

/// The gauge ODE right-hand side. Requires t > 0 and 0 <= kappa <= kappa_max(t).
/// A nonpositive denominator is an internal invariant violation
/// (std::logic_error); it cannot occur on the domain.
double g_rhs(double t, double kappa, const slices::Profile& profile);

struct Sample {
  double t;
  double kappa;
  double rate;  // kappa_t from the trajectory's own right-hand side
};

struct Trajectory {
  slices::Profile profile;
  double label = 0.0;  // kappa at t0
  double step = 0.0;   // the step actually used, (t1 - t0) / steps
  std::size_t clamped_steps = 0;
  std::vector<Sample> samples;

  double t0() const { return samples.front().t; }
  double t1() const { return samples.back().t; }
  /// kappa and rate at time t; cubic Lagrange interpolation between samples.
  Sample at(double t) const;
};

/// Fixed-step classical RK4 from (t0, kappa0) to t1 with nominal step h
/// (rounded so the last step lands on t1). Steps that overshoot
/// kappa_max(t) are clamped onto the boundary; stage evaluations outside
/// [0, kappa_max] are clamped the same way. Throws std::invalid_argument for
/// t0 <= 0, t1 <= t0, h <= 0 or kappa0 outside [0, kappa_max(t0)].
Trajectory integrate(double t0, double kappa0, double t1, const slices::Profile& profile,
                     double h = 1e-3, const Rhs& rhs = g_rhs);

/// count labels evenly spaced over [lo, hi] * kappa_max(t0), 0 < lo < hi < 1.
/// The default central band keeps neighbouring trajectories close enough
/// for label differences to resolve the slice tangent; a family spread over
/// the whole slice separates into a slow group near kappa = 0 and a group
/// pressed against the cap, and three-point label differences lose accuracy.
std::vector<double> interior_labels(const slices::Profile& profile, double t0, std::size_t count,
                                    double lo = 0.45, double hi = 0.55);

/// One trajectory per label, integrated in parallel.
std::vector<Trajectory> integrate_family(std::span<const double> labels, double t0, double t1,
                                         const slices::Profile& profile, double h = 1e-3,
                                         const Rhs& rhs = g_rhs);

/// Kinematics of one trajectory at time t: position on the slice and its
/// time derivative via the chain rule.
struct Kinematics {
  double kappa, rate, r, z, r_dot, z_dot;
};
Kinematics kinematics(const Trajectory& traj, double t);

/// Max over interior labels of |r_t r_phi + z_t z_phi| /
/// (|r_t||r_phi| + |z_t||z_phi| + 1e-300), with phi-derivatives from
/// three-point differences across neighbouring labels. Needs at least 3
/// trajectories with distinct labels (std::invalid_argument otherwise).
double orthogonality_residual(std::span<const Trajectory> family, double t);

/// The normalization condition r_t^2 + z_t^2 + r^M (r_phi^2 + z_phi^2) / rho^2 = 1
/// solved pointwise for rho at each interior label; absent where the
/// velocity is not subluminal.
std::vector<std::optional<double>> rho_diagnostic(std::span<const Trajectory> family, double t);

}  // namespace zmc::ong
