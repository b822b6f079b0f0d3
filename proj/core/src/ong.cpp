#include "zmc/ong.hpp"

#include "zmc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zmc::ong {

double g_rhs(double t, double kappa, const slices::Profile& profile) {
  const double f = profile.f(kappa);
  const double fp = profile.f_prime(kappa);
  const double gap = 2.0 * t - f;
  const double shear = gap - kappa * fp;
  const double denom = shear * shear + 4.0 * kappa * gap;
  if (!(denom > 0.0))
    throw std::logic_error("gauge ODE denominator is not positive at t = " + std::to_string(t) +
                           ", kappa = " + std::to_string(kappa));
  return 2.0 * kappa * (gap + kappa * fp) / denom;
}

Sample Trajectory::at(double t) const {
  if (samples.empty()) throw std::logic_error("empty trajectory");
  const double span_tol = 1e-12 * std::max(1.0, std::abs(t));
  if (t < t0() - span_tol || t > t1() + span_tol)
    throw std::out_of_range("time outside the trajectory");

  auto it = std::lower_bound(samples.begin(), samples.end(), t,
                             [](const Sample& s, double value) { return s.t < value; });
  if (it != samples.end() && std::abs(it->t - t) <= span_tol) return *it;
  if (it != samples.begin() && std::abs(std::prev(it)->t - t) <= span_tol) return *std::prev(it);
  if (samples.size() < 4) throw std::invalid_argument("interpolation needs at least 4 samples");

  // four-point stencil around t
  std::ptrdiff_t hi = it - samples.begin();
  std::ptrdiff_t first = std::clamp<std::ptrdiff_t>(hi - 2, 0, static_cast<std::ptrdiff_t>(samples.size()) - 4);
  Sample out{t, 0.0, 0.0};
  for (std::ptrdiff_t j = first; j < first + 4; ++j) {
    double weight = 1.0;
    for (std::ptrdiff_t k = first; k < first + 4; ++k)
      if (k != j) weight *= (t - samples[k].t) / (samples[j].t - samples[k].t);
    out.kappa += weight * samples[j].kappa;
    out.rate += weight * samples[j].rate;
  }
  return out;
}

namespace {

// kappa pulled back into [0, kappa_max(t)]; f is increasing, so f(kappa) > 2t
// detects the overshoot without solving for kappa_max.
double confine(double t, double kappa, const slices::Profile& profile, bool* clamped = nullptr) {
  if (kappa < 0.0) {
    if (clamped) *clamped = true;
    return 0.0;
  }
  if (profile.f(kappa) > 2.0 * t) {
    if (clamped) *clamped = true;
    return profile.kappa_max(t);
  }
  return kappa;
}

}  // namespace

Trajectory integrate(double t0, double kappa0, double t1, const slices::Profile& profile, double h,
                     const Rhs& rhs) {
  profile.validate();
  if (!(t0 > 0.0)) throw std::invalid_argument("integration needs t0 > 0");
  if (!(t1 > t0)) throw std::invalid_argument("integration needs t1 > t0");
  if (!(h > 0.0)) throw std::invalid_argument("step must be positive");
  if (kappa0 < 0.0 || profile.f(kappa0) > 2.0 * t0 * (1.0 + 1e-14))
    throw std::invalid_argument("initial kappa outside [0, kappa_max(t0)]");

  const auto steps = static_cast<std::size_t>(std::max(1.0, std::round((t1 - t0) / h)));
  const double dt = (t1 - t0) / static_cast<double>(steps);

  auto eval = [&](double t, double kappa) { return rhs(t, confine(t, kappa, profile), profile); };

  Trajectory traj;
  traj.profile = profile;
  traj.label = kappa0;
  traj.step = dt;
  traj.samples.reserve(steps + 1);
  double kappa = kappa0;
  traj.samples.push_back({t0, kappa, eval(t0, kappa)});
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = t0 + static_cast<double>(i) * dt;
    const double t_next = (i + 1 == steps) ? t1 : t0 + static_cast<double>(i + 1) * dt;
    const double k1 = eval(t, kappa);
    const double k2 = eval(t + 0.5 * dt, kappa + 0.5 * dt * k1);
    const double k3 = eval(t + 0.5 * dt, kappa + 0.5 * dt * k2);
    const double k4 = eval(t_next, kappa + dt * k3);
    bool clamped = false;
    kappa = confine(t_next, kappa + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4), profile, &clamped);
    if (clamped) ++traj.clamped_steps;
    traj.samples.push_back({t_next, kappa, rhs(t_next, kappa, profile)});
  }
  return traj;
}

std::vector<double> interior_labels(const slices::Profile& profile, double t0, std::size_t count,
                                    double lo, double hi) {
  if (!(lo > 0.0) || !(hi < 1.0) || !(lo < hi))
    throw std::invalid_argument("label band must satisfy 0 < lo < hi < 1");
  if (count < 2) throw std::invalid_argument("need at least 2 labels");
  const double kmax = profile.kappa_max(t0);
  std::vector<double> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    labels.push_back(kmax * (lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1)));
  return labels;
}

std::vector<Trajectory> integrate_family(std::span<const double> labels, double t0, double t1,
                                         const slices::Profile& profile, double h, const Rhs& rhs) {
  std::vector<Trajectory> family(labels.size());
  parallel_for(labels.size(),
               [&](std::size_t i) { family[i] = integrate(t0, labels[i], t1, profile, h, rhs); });
  return family;
}

Kinematics kinematics(const Trajectory& traj, double t) {
  const Sample s = traj.at(t);
  const auto& profile = traj.profile;
  const double gap = 2.0 * t - profile.f(s.kappa);
  const double r = std::sqrt(std::max(0.0, s.kappa * gap));
  Kinematics k{s.kappa, s.rate, r, -t + s.kappa, 0.0, s.rate - 1.0};
  // 2 r r_t = kappa_t (2t - f - kappa f') + 2 kappa
  const double numer = s.rate * (gap - s.kappa * profile.f_prime(s.kappa)) + 2.0 * s.kappa;
  k.r_dot = r > 0.0 ? numer / (2.0 * r) : 0.0;
  return k;
}

namespace {

struct LabelDerivatives {
  Kinematics here;
  double r_phi;
  double z_phi;
};

std::vector<LabelDerivatives> label_derivatives(std::span<const Trajectory> family, double t) {
  if (family.size() < 3) throw std::invalid_argument("need at least 3 trajectories");
  std::vector<const Trajectory*> sorted;
  for (const auto& tr : family) sorted.push_back(&tr);
  std::sort(sorted.begin(), sorted.end(),
            [](const Trajectory* a, const Trajectory* b) { return a->label < b->label; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!(sorted[i]->label > sorted[i - 1]->label))
      throw std::invalid_argument("trajectory labels must be distinct for label differences");

  std::vector<Kinematics> states;
  for (const auto* tr : sorted) states.push_back(kinematics(*tr, t));

  std::vector<LabelDerivatives> out;
  for (std::size_t i = 1; i + 1 < sorted.size(); ++i) {
    const double h1 = sorted[i]->label - sorted[i - 1]->label;
    const double h2 = sorted[i + 1]->label - sorted[i]->label;
    const double w_prev = -h2 / (h1 * (h1 + h2));
    const double w_here = (h2 - h1) / (h1 * h2);
    const double w_next = h1 / (h2 * (h1 + h2));
    const auto d = [&](double Kinematics::*field) {
      return w_prev * (states[i - 1].*field) + w_here * (states[i].*field) +
             w_next * (states[i + 1].*field);
    };
    out.push_back({states[i], d(&Kinematics::r), d(&Kinematics::z)});
  }
  return out;
}

}  // namespace

double orthogonality_residual(std::span<const Trajectory> family, double t) {
  double worst = 0.0;
  for (const auto& d : label_derivatives(family, t)) {
    const double dot = d.here.r_dot * d.r_phi + d.here.z_dot * d.z_phi;
    const double scale =
        std::abs(d.here.r_dot) * std::abs(d.r_phi) + std::abs(d.here.z_dot) * std::abs(d.z_phi);
    worst = std::max(worst, std::abs(dot) / (scale + 1e-300));
  }
  return worst;
}

std::vector<std::optional<double>> rho_diagnostic(std::span<const Trajectory> family, double t) {
  std::vector<std::optional<double>> out;
  for (const auto& d : label_derivatives(family, t)) {
    const double speed2 = d.here.r_dot * d.here.r_dot + d.here.z_dot * d.here.z_dot;
    const double slack = 1.0 - speed2;
    const int M = family.front().profile.M;
    const double numer = std::pow(d.here.r, M) * (d.r_phi * d.r_phi + d.z_phi * d.z_phi);
    if (slack > 0.0 && numer > 0.0)
      out.emplace_back(std::sqrt(numer / slack));
    else
      out.emplace_back(std::nullopt);
  }
  return out;
}

}  // namespace zmc::ong
