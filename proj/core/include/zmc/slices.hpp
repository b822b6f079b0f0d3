#pragma once

// Constant-t slices of the timelike class A surface (C > 0) in R^{1,M+1},
// written as graphs over kappa = t + z:
//
//   r^2 = kappa (2t - f(kappa)),   z = -t + kappa,   f(kappa) = kappa + C kappa^{2M+1}.
//
// For t > 0 the slice is kappa in [0, kappa_max(t)] with f(kappa_max) = 2t.
// Slices at t < 0 are mirror images: (t, z, kappa) -> (-t, -z, -kappa).

#include <span>
#include <vector>

namespace zmc::slices {

/// The profile function f for given M >= 1 and C > 0.
struct Profile {
  int M = 2;
  double C = 1.0;

  /// Throws std::invalid_argument unless M >= 1 and C > 0.
  void validate() const;

  double f(double kappa) const;
  double f_prime(double kappa) const;

  /// Unique root of f(kappa) = 2t on [0, inf): bisection on
  /// [0, max(2t, (2t/C)^{1/(2M+1)}) + 1] followed by Newton polishing to
  /// 1e-12 relative. t == 0 gives 0; t < 0 throws std::domain_error (use
  /// the mirror symmetry).
  double kappa_max(double t) const;
};

struct SliceParams {
  Profile profile;
  double t = 1.0;
};

double f(double kappa, const SliceParams& p);
double f_prime(double kappa, const SliceParams& p);
double kappa_max(const SliceParams& p);

struct SlicePoint {
  double kappa;
  double r;
  double z;
};

/// r = sqrt(kappa (2t - f(kappa))), z = -t + kappa. r is exactly 0 when
/// 2t - f(kappa) vanishes to rounding. Throws std::domain_error when r^2 is
/// negative beyond rounding (kappa outside the slice).
SlicePoint slice_point(double kappa, const SliceParams& p);

/// n_samples >= 3 points on the Chebyshev-Lobatto grid of [0, kappa_max],
/// ascending in kappa, with r = 0 exactly at both ends. For t < 0 the
/// mirrored slice is returned, ascending in |kappa|.
std::vector<SlicePoint> slice_profile(const SliceParams& p, int n_samples);

/// Every second divided difference of r(z) is <= 0. z must be strictly
/// increasing; fewer than three points is trivially concave.
bool convexity_check(std::span<const double> z, std::span<const double> r);

/// convexity_check on slice_profile(p, n_samples); n_samples >= 16.
bool convexity_check(const SliceParams& p, int n_samples);

}  // namespace zmc::slices
