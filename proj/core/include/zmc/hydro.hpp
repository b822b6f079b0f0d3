#pragma once

// Similarity solutions t - z = p(tau, r) = tau^a P(tau^c r),
// P(w) = alpha + beta w^2 / 2, of the axially symmetric hydrodynamic equation
//
//   p_tt + 2 (p_r p_tr - p_t p_rr) = (M-1)/r (2 p_t p_r + p_r^3),
//
// with dots read as d/dtau and primes as d/dr. alpha stays a formal symbol:
// coefficients are polynomials in alpha, so one zero test covers every alpha.

#include "zmc/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zmc::hydro {

/// Polynomial in the formal symbol alpha with rational coefficients.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(const Rational& c);  // NOLINT: constants convert implicitly
  static AlphaPoly alpha();

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<unsigned, Rational>& coeffs() const { return coeffs_; }
  double eval(double alpha) const;
  std::string to_string() const;

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator-=(const AlphaPoly& o);
  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  friend bool operator==(const AlphaPoly&, const AlphaPoly&) = default;

 private:
  void accumulate(unsigned degree, const Rational& c);
  std::map<unsigned, Rational> coeffs_;
};

/// Exponents (e_tau, e_r); in the reduced ODE the second slot is w and the
/// first is always 0.
struct TRKey {
  Rational tau_exp;
  Rational r_exp;
  bool operator==(const TRKey&) const = default;
};

struct TRKeyLess {
  bool operator()(const TRKey& a, const TRKey& b) const;
};

class TRExpr {
 public:
  using TermMap = std::map<TRKey, AlphaPoly, TRKeyLess>;

  TRExpr() = default;
  static TRExpr term(const AlphaPoly& c, const Rational& tau_exp, const Rational& r_exp);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  TRExpr d_tau() const;
  TRExpr d_r() const;
  /// Multiplies by r^k.
  TRExpr shift_r(const Rational& k) const;

  /// Requires tau > 0 and r > 0.
  double eval(double tau, double r, double alpha) const;

  /// Terms in key order, "(coeff) * tau^p * r^q"; var names configurable.
  std::string to_string(const std::string& tau_name = "tau", const std::string& r_name = "r") const;

  TRExpr& operator+=(const TRExpr& o);
  TRExpr& operator-=(const TRExpr& o);
  friend TRExpr operator+(TRExpr a, const TRExpr& b) { return a += b; }
  friend TRExpr operator-(TRExpr a, const TRExpr& b) { return a -= b; }
  friend TRExpr operator*(const TRExpr& a, const TRExpr& b);
  friend TRExpr operator*(const AlphaPoly& c, const TRExpr& a);
  friend bool operator==(const TRExpr&, const TRExpr&) = default;

 private:
  void accumulate(const TRKey& key, const AlphaPoly& c);
  TermMap terms_;
};

enum class Branch { minus, plus };

std::string to_string(Branch b);
Branch parse_branch(std::string_view text);

struct SimilarityFamily {
  int M;
  Branch branch;

  /// Throws std::invalid_argument for M < 2.
  static SimilarityFamily make(int M, Branch branch);

  /// minus: a = -(M+1)/(M-1); plus: a = 2M+1.
  Rational a() const;
  /// c = -(a+1)/2, so a + 2c + 1 = 0.
  Rational c() const;
  /// minus: -1/(M-1); plus: 1.
  Rational beta() const;
};

/// alpha tau^a + (beta/2) tau^{a+2c} r^2.
TRExpr p_from_parameters(const Rational& a, const Rational& c, const Rational& beta);
TRExpr p_solution(const SimilarityFamily& fam);

/// The five summands of LHS - RHS before collection:
/// p_tt, 2 p_r p_tr, -2 p_t p_rr, -(M-1)/r 2 p_t p_r, -(M-1)/r p_r^3.
std::vector<TRExpr> eq18_summands(const TRExpr& p, int M);

/// LHS - RHS, collected.
TRExpr eq18_residual(const TRExpr& p, int M);

/// Every term of every summand has similarity weight e_tau - c e_r == expected.
bool uniform_similarity_weight(const std::vector<TRExpr>& summands, const Rational& c,
                               const Rational& expected);

/// LHS - RHS of the ODE obtained by inserting p = tau^a P(tau^c r) into the
/// PDE, for P = alpha + beta w^2 / 2, as an expression in w:
///   a(a-1)P - 3/4 (a^2-1) w P' + (a+1)^2/4 w^2 P'' + (Ma + M - 2) P'^2
///   - (M-1)/w P'^3 - 2a (P P'' + (M-1) P P'/w).
TRExpr reduced_ode_residual(const Rational& a, int M, const Rational& beta);

struct Grid {
  double tau_lo = 1.0, tau_hi = 2.0;
  double r_lo = 0.1, r_hi = 1.0;
  int n_tau = 11, n_r = 11;
};

/// max |LHS - RHS| / (|LHS| + |RHS| + 1e-300) over the grid with alpha
/// substituted, derivatives taken term by term.
double eq18_residual_numeric(const TRExpr& p, int M, const Grid& grid, double alpha);

}  // namespace zmc::hydro
