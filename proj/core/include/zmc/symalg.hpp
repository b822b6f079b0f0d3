#pragma once

// Differential operators on FieldExpr and the exact identity checks for the
// ansatz chi = psi * phi, psi = (alpha.x)^n = u^n, phi = x o x.
//
// psi is read as (alpha.x)^n throughout, so psi^2 = u^{2n} and
// psi^3 = u^{3n}. With that reading box(chi) = (4n + 2 gamma) psi holds
// exactly; reading psi as alpha.x alone does not.

#include "zmc/field_expr.hpp"
#include "zmc/metric.hpp"

#include <optional>
#include <utility>

namespace zmc::symalg {

/// d/du and d/dv.
FieldExpr partial_u(const FieldExpr& e);
FieldExpr partial_v(const FieldExpr& e);

/// d/dx^mu for coordinate slot mu in [0, D): d_t = d_u + d_v,
/// d_z = d_u - d_v, transverse slots act on x^a.
FieldExpr partial(const FieldExpr& e, int mu);

/// eta^{mu nu} d_mu a d_nu b.
FieldExpr contract_grad(const FieldExpr& a, const FieldExpr& b, const DiagonalMetric& eta);
FieldExpr grad_square(const FieldExpr& a, const DiagonalMetric& eta);

/// eta^{mu nu} d_mu d_nu e = 4 d_u d_v e + sum_a eta^{aa} d_a^2 e.
FieldExpr box(const FieldExpr& e, const DiagonalMetric& eta);

/// x o x = uv + sum_a g_a (x^a)^2.
FieldExpr quadratic_form(const DiagonalMetric& g);

/// u^n (uv + sum_a g_a (x^a)^2).
FieldExpr chi_ansatz(const Rational& n, const DiagonalMetric& g);

/// 1/2 d^mu e d_mu((d e)^2) - (d e)^2 box(e). Vanishes identically iff every
/// level set of e has zero mean curvature.
FieldExpr mc_numerator(const FieldExpr& e, const DiagonalMetric& eta);

/// The closed form the numerator takes on chi_ansatz(n, g) for a +-1 metric g:
///   -[(4n(4n + 2 gamma) - (12n^2 + 4n + 8)) psi^3 phi + 8 gamma psi^3 x^2].
FieldExpr mc_numerator_closed_form(const Rational& n, const DiagonalMetric& eta,
                                   const DiagonalMetric& g);

/// box(chi) == (4n + 2 gamma) psi, and, when lambda == 1,
/// (d chi)^2 == 4 psi^2 x^2 + 4 n psi^2 phi.
bool verify_identity_eq4(const Rational& n, const DiagonalMetric& eta, const DiagonalMetric& g);

/// (d chi)^2 == 4((n + 1 - lambda) psi^2 phi + lambda psi^2 x^2).
bool verify_identity_eq13(const Rational& n, const DiagonalMetric& eta, const DiagonalMetric& g,
                          const Rational& lambda);

/// 1/2 d^mu chi d_mu((d chi)^2) ==
///   4(psi^3 phi (3n^2 + n(5 - 4 lambda) + 2(lambda^2 - lambda + 1))
///     + lambda psi^3 x^2 (4n + 2(1 - lambda))).
bool verify_identity_eq14(const Rational& n, const DiagonalMetric& eta, const DiagonalMetric& g,
                          const Rational& lambda);

/// Splits e = A u^{power} phi + B u^{power} x^2 when phi and x^2 are
/// independent (g != eta). Absent if e has any other shape.
std::optional<std::pair<Rational, Rational>> split_phi_x2(const FieldExpr& e,
                                                          const Rational& power,
                                                          const DiagonalMetric& eta,
                                                          const DiagonalMetric& g);

/// Substitutes (t, z) -> (-t, -z), i.e. (u, v) -> (-u, -v). Needs integer
/// u exponents.
FieldExpr reflect_tz(const FieldExpr& e);

}  // namespace zmc::symalg
