#include "zmc/slices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zmc::slices {

void Profile::validate() const {
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  if (!(C > 0.0) || !std::isfinite(C))
    throw std::invalid_argument("slices need C > 0 (the timelike branch)");
}

double Profile::f(double kappa) const {
  return kappa + C * std::pow(kappa, 2 * M + 1);
}

double Profile::f_prime(double kappa) const {
  return 1.0 + (2 * M + 1) * C * std::pow(kappa, 2 * M);
}

double Profile::kappa_max(double t) const {
  validate();
  if (!std::isfinite(t)) throw std::domain_error("t must be finite");
  if (t < 0.0)
    throw std::domain_error("kappa_max needs t >= 0; for t < 0 use kappa -> -kappa, z -> -z");
  if (t == 0.0) return 0.0;

  const double target = 2.0 * t;
  double lo = 0.0;
  double hi = std::max(target, std::pow(target / C, 1.0 / (2 * M + 1))) + 1.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-6 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < target ? lo : hi) = mid;
  }

  if (f(hi) == target) return hi;
  double kappa = 0.5 * (lo + hi);
  for (int i = 0; i < 100; ++i) {
    double next = kappa - (f(kappa) - target) / f_prime(kappa);
    // a Newton step leaving the bracket falls back to bisection and does
    // not count towards convergence
    const bool newton = next > lo && next < hi;
    if (!newton) next = 0.5 * (lo + hi);
    const double fn = f(next);
    if (fn == target) return next;
    (fn < target ? lo : hi) = next;
    const bool converged = newton && std::abs(next - kappa) <= 1e-12 * std::abs(next);
    kappa = next;
    if (converged) break;
  }
  // one more Newton step settles the last ulp
  const double polished = kappa - (f(kappa) - target) / f_prime(kappa);
  return std::abs(f(polished) - target) <= std::abs(f(kappa) - target) ? polished : kappa;
}

double f(double kappa, const SliceParams& p) { return p.profile.f(kappa); }
double f_prime(double kappa, const SliceParams& p) { return p.profile.f_prime(kappa); }
double kappa_max(const SliceParams& p) { return p.profile.kappa_max(p.t); }

SlicePoint slice_point(double kappa, const SliceParams& p) {
  p.profile.validate();
  const double fk = p.profile.f(kappa);
  const double two_t = 2.0 * p.t;
  double gap = two_t - fk;
  const double eps = std::numeric_limits<double>::epsilon();
  if (std::abs(gap) <= 8.0 * eps * std::max(std::abs(two_t), std::abs(fk))) gap = 0.0;
  double r2 = kappa * gap;
  if (r2 < 0.0) {
    if (r2 < -1e-15 * std::max(1.0, two_t * two_t))
      throw std::domain_error("kappa = " + std::to_string(kappa) + " lies outside the slice");
    r2 = 0.0;
  }
  return SlicePoint{kappa, std::sqrt(r2) + 0.0, -p.t + kappa};
}

std::vector<SlicePoint> slice_profile(const SliceParams& p, int n_samples) {
  if (n_samples < 3) throw std::invalid_argument("slice_profile needs at least 3 samples");
  if (p.t < 0.0) {
    auto mirrored = slice_profile(SliceParams{p.profile, -p.t}, n_samples);
    for (auto& s : mirrored) {
      s.kappa = -s.kappa + 0.0;
      s.z = -s.z + 0.0;
    }
    return mirrored;
  }
  const double kmax = kappa_max(p);
  std::vector<SlicePoint> out;
  out.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    double kappa;
    if (i == 0) {
      kappa = 0.0;
    } else if (i == n_samples - 1) {
      kappa = kmax;
    } else {
      kappa = 0.5 * kmax * (1.0 - std::cos(std::numbers::pi * i / (n_samples - 1)));
    }
    SlicePoint s = slice_point(kappa, p);
    if (i == 0 || i == n_samples - 1) s.r = 0.0;
    out.push_back(s);
  }
  return out;
}

bool convexity_check(std::span<const double> z, std::span<const double> r) {
  if (z.size() != r.size()) throw std::invalid_argument("z and r must have equal length");
  for (std::size_t i = 1; i < z.size(); ++i)
    if (!(z[i] > z[i - 1])) throw std::invalid_argument("z must be strictly increasing");
  for (std::size_t i = 1; i + 1 < z.size(); ++i) {
    const double left = (r[i] - r[i - 1]) / (z[i] - z[i - 1]);
    const double right = (r[i + 1] - r[i]) / (z[i + 1] - z[i]);
    if ((right - left) / (z[i + 1] - z[i - 1]) > 0.0) return false;
  }
  return true;
}

bool convexity_check(const SliceParams& p, int n_samples) {
  if (n_samples < 16) throw std::invalid_argument("convexity_check needs at least 16 samples");
  const auto profile = slice_profile(p, n_samples);
  std::vector<double> z;
  std::vector<double> r;
  for (const auto& s : profile) {
    z.push_back(s.z);
    r.push_back(s.r);
  }
  if (p.t < 0.0) {
    std::reverse(z.begin(), z.end());
    std::reverse(r.begin(), r.end());
  }
  return convexity_check(z, r);
}

}  // namespace zmc::slices
