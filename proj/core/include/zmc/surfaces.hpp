#pragma once

// Concrete zero-mean-curvature families as level sets in R^{1,D-1}.
//
//   class A  (g = eta, n = -2(D-1)):   x.x = C (t+z)^{2(D-1)}
//   class B  (gamma = 0, n = 2):       (t+z)^2 (x o x) = C'
//   class C  (g_a = 1/(M-1), n = 2/(M-1)):
//            (t^2 - z^2 + r^2/(M-1)) (t+z)^{2/(M-1)} = C'
//
// The class A field is kept in its polynomial form x.x - C u^{2(D-1)} with
// level 0; B and C use chi = u^n (x o x) with level C'.

#include "zmc/field_expr.hpp"
#include "zmc/metric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zmc::surfaces {

enum class Causal { timelike, spacelike, null };

std::string to_string(Causal c);

struct SolutionFamily {
  ClassTag tag;
  int dim;
  Rational n;
  double level_constant;  // C for class A, C' for B and C
  DiagonalMetric eta;
  DiagonalMetric g;

  int transverse_dim() const { return dim - 2; }

  /// Builds a family with the nontrivial admissible exponent. eta defaults
  /// to mostly-minus Minkowski; class C always uses it. Throws
  /// std::invalid_argument if the invariants for the class cannot hold
  /// (e.g. class B with odd D, class C with M < 2).
  static SolutionFamily make(ClassTag tag, int dim, double level_constant,
                             std::optional<DiagonalMetric> eta = std::nullopt);
};

struct SurfacePoint {
  std::vector<double> coords;  // (t, x^1, ..., x^M, z)
  double residual_mc = 0.0;
  Causal causal = Causal::null;
};

/// The level-set field (polynomial form for class A).
FieldExpr field(const SolutionFamily& fam);

/// Level value of field(fam): 0 for class A, C' otherwise.
double level_value(const SolutionFamily& fam);

/// mc_numerator of u^n (x o x) is the zero expression.
bool verify_zmc(const SolutionFamily& fam);

/// Precomputed numeric view of a field: value, gradient and mean-curvature
/// numerator, all compiled once.
class FieldProbe {
 public:
  FieldProbe(const FieldExpr& field, const DiagonalMetric& eta);

  double value(std::span<const double> p) const { return value_.eval(p); }
  std::vector<double> gradient(std::span<const double> p) const;
  double mc_numerator(std::span<const double> p) const { return mc_.eval(p); }

  /// |N(p)| / S with S = (|grad|_E^2 + 1e-300)^{3/2} (1 + |p|_E). N is cubic
  /// in the field and S is cubic in its gradient, so the ratio does not
  /// depend on how the field is normalized.
  double mc_residual(std::span<const double> p) const;

  /// Sign of (d F)^2_eta with threshold tol * |grad|_E^2: negative means a
  /// spacelike normal and hence a timelike surface. Throws std::domain_error
  /// at a zero-gradient point.
  Causal causal_character(std::span<const double> p, double tol = 1e-10) const;

  const DiagonalMetric& eta() const { return eta_; }

 private:
  DiagonalMetric eta_;
  CompiledExpr value_;
  std::vector<CompiledExpr> gradient_;
  CompiledExpr mc_;
};

/// Solves the level equation for r >= 0 on the ray with the given unit
/// transverse direction. r^2 = (C u^{-n} - uv) / sum_a g_a d_a^2. Absent when
/// r^2 < 0. Throws std::domain_error on the singular line t + z = 0, for
/// u <= 0 with a fractional exponent, or when the direction is g-null.
std::optional<SurfacePoint> sample_point(const SolutionFamily& fam, double t, double z,
                                         std::span<const double> direction);

double mc_residual(const SolutionFamily& fam, const SurfacePoint& p);
Causal causal_character(const SolutionFamily& fam, const SurfacePoint& p, double tol = 1e-10);

/// Field value at (t, x, z) equals the value at (-t, x, -z). Exact rational
/// evaluation for integer exponents; otherwise real odd roots extend u^{p/q}
/// to u < 0 and values are compared to 1e-12 relative. A reflected point
/// outside the real domain counts as not symmetric.
bool is_reflection_symmetric(const FieldExpr& e, std::span<const double> point);
bool symmetry_check(const SolutionFamily& fam, const SurfacePoint& p);

struct CloudOptions {
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  double t_min = 1.0;  // t drawn uniformly from [t_min, t_max]
  double t_max = 1.0;
  // |t + z| is drawn from [u_margin, u_max]. On class A surfaces
  // (dF)^2 = -4(2D-3) C u^{2(D-1)}, so the normal approaches the light cone
  // as u -> 0 and the causal test would hit its null threshold.
  double u_margin = 0.25;
  double u_max = 2.0;
  std::size_t max_attempts = 10000;  // per point
  double causal_tol = 1e-10;
};

/// Seeded point cloud; point i depends only on (seed, i), so the result is
/// independent of the thread count. Points whose rejection loop runs out of
/// attempts are dropped.
std::vector<SurfacePoint> sample_cloud(const SolutionFamily& fam, const CloudOptions& opts);

}  // namespace zmc::surfaces
