#include "zmc/surfaces.hpp"

#include "zmc/parallel.hpp"
#include "zmc/symalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace zmc::surfaces {

std::string to_string(Causal c) {
  switch (c) {
    case Causal::timelike: return "timelike";
    case Causal::spacelike: return "spacelike";
    case Causal::null: return "null";
  }
  return "?";
}

SolutionFamily SolutionFamily::make(ClassTag tag, int dim, double level_constant,
                                    std::optional<DiagonalMetric> eta) {
  if (!std::isfinite(level_constant)) throw std::invalid_argument("level constant must be finite");
  DiagonalMetric minkowski = DiagonalMetric::minkowski(dim);
  DiagonalMetric e = eta.value_or(minkowski);
  if (e.dim() != dim) throw std::invalid_argument("metric dimension mismatch");

  DiagonalMetric g = e;
  switch (tag) {
    case ClassTag::A:
      break;
    case ClassTag::B:
      g = partner_metric_for_class_b(dim, e);
      break;
    case ClassTag::C:
      if (e != minkowski) throw std::invalid_argument("class C needs eta_a = -1 for all a");
      g = class_c_metric(dim - 2);
      break;
  }
  auto lambda = lambda_decompose(e, g);
  if (!lambda) throw std::invalid_argument("metric pair has no lambda decomposition");
  auto roots = admissible_exponents(tag, dim, gamma(e, g), *lambda);
  Rational n = -1;
  for (const auto& root : roots)
    if (root != -1) n = root;
  return SolutionFamily{tag, dim, n, level_constant, std::move(e), std::move(g)};
}

FieldExpr field(const SolutionFamily& fam) {
  if (fam.tag == ClassTag::A) {
    return symalg::quadratic_form(fam.g) -
           FieldExpr::u_power(fam.dim, -fam.n) * Rational(fam.level_constant);
  }
  return symalg::chi_ansatz(fam.n, fam.g);
}

double level_value(const SolutionFamily& fam) {
  return fam.tag == ClassTag::A ? 0.0 : fam.level_constant;
}

bool verify_zmc(const SolutionFamily& fam) {
  return symalg::mc_numerator(symalg::chi_ansatz(fam.n, fam.g), fam.eta).is_zero();
}

FieldProbe::FieldProbe(const FieldExpr& f, const DiagonalMetric& eta)
    : eta_(eta), value_(f.compile()), mc_(symalg::mc_numerator(f, eta).compile()) {
  gradient_.reserve(static_cast<std::size_t>(f.dim()));
  for (int mu = 0; mu < f.dim(); ++mu) gradient_.push_back(symalg::partial(f, mu).compile());
}

std::vector<double> FieldProbe::gradient(std::span<const double> p) const {
  std::vector<double> out;
  out.reserve(gradient_.size());
  for (const auto& d : gradient_) out.push_back(d.eval(p));
  return out;
}

double FieldProbe::mc_residual(std::span<const double> p) const {
  double grad2 = 0.0;
  for (double d : gradient(p)) grad2 += d * d;
  double norm2 = 0.0;
  for (double x : p) norm2 += x * x;
  const double scale = std::pow(grad2 + 1e-300, 1.5) * (1.0 + std::sqrt(norm2));
  return std::abs(mc_numerator(p)) / scale;
}

Causal FieldProbe::causal_character(std::span<const double> p, double tol) const {
  const auto grad = gradient(p);
  double euclid = 0.0;
  double minkowski = 0.0;
  for (std::size_t mu = 0; mu < grad.size(); ++mu) {
    euclid += grad[mu] * grad[mu];
    minkowski += grad[mu] * grad[mu] / eta_[static_cast<int>(mu)].get_d();
  }
  if (!(euclid > 0.0)) throw std::domain_error("zero gradient: singular point of the level set");
  const double threshold = tol * euclid;
  if (minkowski < -threshold) return Causal::timelike;
  if (minkowski > threshold) return Causal::spacelike;
  return Causal::null;
}

namespace {

double int_pow(double x, long k) {
  if (k < 0) return 1.0 / int_pow(x, -k);
  double r = 1.0;
  while (k--) r *= x;
  return r;
}

std::optional<double> solve_r_squared(const SolutionFamily& fam, double t, double z,
                                      std::span<const double> direction) {
  const int m = fam.transverse_dim();
  if (direction.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("direction must have M components");
  double norm2 = 0.0;
  double q_g = 0.0;
  for (int a = 0; a < m; ++a) {
    norm2 += direction[a] * direction[a];
    q_g += fam.g.transverse(a).get_d() * direction[a] * direction[a];
  }
  if (std::abs(norm2 - 1.0) > 1e-9) throw std::invalid_argument("direction must be a unit vector");
  if (q_g == 0.0) throw std::domain_error("direction is null for the quadratic form");

  const double u = t + z;
  const double v = t - z;
  if (u == 0.0) throw std::domain_error("point on the light-like line t + z = 0");
  double u_pow;  // u^{-n}
  if (is_integer(fam.n)) {
    u_pow = int_pow(u, -fam.n.get_num().get_si());
  } else {
    if (u < 0.0) throw std::domain_error("fractional exponent needs t + z > 0");
    u_pow = std::pow(u, -fam.n.get_d());
  }
  const double r2 = (fam.level_constant * u_pow - u * v) / q_g;
  if (r2 < 0.0) return std::nullopt;
  return r2 + 0.0;  // no -0.0 in exported coordinates
}

std::vector<double> embed(double t, double z, double r, std::span<const double> direction) {
  std::vector<double> coords;
  coords.reserve(direction.size() + 2);
  coords.push_back(t);
  for (double d : direction) coords.push_back(r * d);
  coords.push_back(z);
  return coords;
}

std::optional<SurfacePoint> make_point(const SolutionFamily& fam, const FieldProbe& probe,
                                       double t, double z, std::span<const double> direction,
                                       double tol) {
  auto r2 = solve_r_squared(fam, t, z, direction);
  if (!r2) return std::nullopt;
  SurfacePoint p;
  p.coords = embed(t, z, std::sqrt(*r2), direction);
  p.residual_mc = probe.mc_residual(p.coords);
  p.causal = probe.causal_character(p.coords, tol);
  return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform doubles straight from the engine bits; std::uniform_real_distribution
// is implementation-defined and would break cross-platform reproducibility.
class PointRng {
 public:
  PointRng(std::uint64_t seed, std::uint64_t index)
      : engine_(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL))) {}
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::optional<SurfacePoint> sample_point(const SolutionFamily& fam, double t, double z,
                                         std::span<const double> direction) {
  FieldProbe probe(field(fam), fam.eta);
  return make_point(fam, probe, t, z, direction, 1e-10);
}

double mc_residual(const SolutionFamily& fam, const SurfacePoint& p) {
  return FieldProbe(field(fam), fam.eta).mc_residual(p.coords);
}

Causal causal_character(const SolutionFamily& fam, const SurfacePoint& p, double tol) {
  return FieldProbe(field(fam), fam.eta).causal_character(p.coords, tol);
}

namespace {

// Real value of u^{p/q} extended to u < 0 through odd roots; absent when q
// is even.
std::optional<double> signed_power(double u, const Rational& e) {
  if (u >= 0.0) return std::pow(u, e.get_d());
  if (is_integer(e)) return int_pow(u, e.get_num().get_si());
  if (mpz_even_p(e.get_den_mpz_t())) return std::nullopt;
  const double magnitude = std::pow(-u, e.get_d());
  return mpz_odd_p(e.get_num_mpz_t()) ? -magnitude : magnitude;
}

std::optional<double> eval_extended(const FieldExpr& e, std::span<const double> p) {
  const double u = p.front() + p.back();
  const double v = p.front() - p.back();
  double sum = 0.0;
  for (const auto& [key, c] : e.terms()) {
    auto up = signed_power(u, key.u_exp);
    if (!up) return std::nullopt;
    double term = c.get_d() * *up * int_pow(v, key.v_exp);
    for (std::size_t a = 0; a < key.x_exp.size(); ++a) term *= int_pow(p[a + 1], key.x_exp[a]);
    sum += term;
  }
  return sum;
}

}  // namespace

bool is_reflection_symmetric(const FieldExpr& e, std::span<const double> point) {
  if (point.size() != static_cast<std::size_t>(e.dim()))
    throw std::invalid_argument("point has wrong dimension");
  std::vector<double> mirrored(point.begin(), point.end());
  mirrored.front() = -mirrored.front();
  mirrored.back() = -mirrored.back();

  if (e.has_integer_exponents()) {
    std::vector<Rational> exact(point.begin(), point.end());
    std::vector<Rational> exact_mirror(mirrored.begin(), mirrored.end());
    if (sgn(exact.front() + exact.back()) == 0) {
      // negative u powers blow up on the light-like line; compare the
      // reflected expression instead
      return symalg::reflect_tz(e) == e;
    }
    return e.eval_exact(exact) == e.eval_exact(exact_mirror);
  }
  auto a = eval_extended(e, point);
  auto b = eval_extended(e, mirrored);
  if (!a || !b) return false;
  return std::abs(*a - *b) <= 1e-12 * std::max({1.0, std::abs(*a), std::abs(*b)});
}

bool symmetry_check(const SolutionFamily& fam, const SurfacePoint& p) {
  return is_reflection_symmetric(field(fam), p.coords);
}

std::vector<SurfacePoint> sample_cloud(const SolutionFamily& fam, const CloudOptions& opts) {
  if (opts.t_max < opts.t_min) throw std::invalid_argument("t_max < t_min");
  if (!(opts.u_max > opts.u_margin)) throw std::invalid_argument("u_max must exceed u_margin");
  const FieldProbe probe(field(fam), fam.eta);
  const int m = fam.transverse_dim();
  const bool positive_u_only = !is_integer(fam.n);

  // Class B is sampled on s = 0 slices: directions live in the transverse
  // slots whose sign was flipped relative to eta.
  std::vector<int> active;
  for (int a = 0; a < m; ++a)
    if (fam.tag != ClassTag::B || fam.g.transverse(a) != fam.eta.transverse(a)) active.push_back(a);

  std::vector<std::optional<SurfacePoint>> slots(opts.count);
  parallel_for(opts.count, [&](std::size_t i) {
    PointRng rng(opts.seed, i);
    for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
      const double t = opts.t_min == opts.t_max ? opts.t_min : rng.uniform(opts.t_min, opts.t_max);
      const double u = positive_u_only ? rng.uniform(0.0, opts.u_max) : rng.uniform(-opts.u_max, opts.u_max);
      std::vector<double> direction(static_cast<std::size_t>(m), 0.0);
      double norm2 = 0.0;
      for (int a : active) {
        const double d = rng.uniform(-1.0, 1.0);
        direction[static_cast<std::size_t>(a)] = d;
        norm2 += d * d;
      }
      if (std::abs(u) < opts.u_margin || norm2 > 1.0 || norm2 < 1e-6) continue;
      for (double& d : direction) d /= std::sqrt(norm2);
      auto p = make_point(fam, probe, t, u - t, direction, opts.causal_tol);
      if (p) {
        slots[i] = std::move(p);
        return;
      }
    }
  });

  std::vector<SurfacePoint> out;
  out.reserve(opts.count);
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace zmc::surfaces
