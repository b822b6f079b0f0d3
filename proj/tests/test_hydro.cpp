#include <doctest.h>

#include "zmc/hydro.hpp"

#include <cmath>
#include <stdexcept>
#include <random>

using namespace zmc;
using namespace zmc::hydro;

namespace {

const AlphaPoly kAlpha = AlphaPoly::alpha();

TRExpr alpha_term(const Rational& tau_exp) { return TRExpr::term(kAlpha, tau_exp, 0); }

// PDE residual LHS - RHS from central differences of a plain function,
// normalized the same way as the library's numeric check.
double fd_pde_residual(const std::function<double(double, double)>& p, int M, double tau, double r) {
  const double h = 1e-3;
  const double pt = (p(tau + h, r) - p(tau - h, r)) / (2 * h);
  const double pr = (p(tau, r + h) - p(tau, r - h)) / (2 * h);
  const double ptt = (p(tau + h, r) - 2 * p(tau, r) + p(tau - h, r)) / (h * h);
  const double prr = (p(tau, r + h) - 2 * p(tau, r) + p(tau, r - h)) / (h * h);
  const double ptr = (p(tau + h, r + h) - p(tau + h, r - h) - p(tau - h, r + h) + p(tau - h, r - h)) / (4 * h * h);
  const double lhs = ptt + 2 * (pr * ptr - pt * prr);
  const double rhs = (M - 1) / r * (2 * pt * pr + pr * pr * pr);
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs));
}

Rational frac(int p, int q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

TRExpr random_trexpr(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4), coeff(-3, 3), exp(-6, 6);
  TRExpr e;
  for (int i = terms(rng); i > 0; --i) {
    const int c = coeff(rng);
    e += TRExpr::term(AlphaPoly(Rational(c == 0 ? 2 : c)) + (i % 2 ? kAlpha : AlphaPoly()),
                      frac(exp(rng), 2), frac(exp(rng), 3));
  }
  return e;
}

}  // namespace

TEST_CASE("family parameters") {
  const auto m2 = SimilarityFamily::make(2, Branch::minus);
  CHECK(m2.a() == -3);
  CHECK(m2.c() == 1);
  CHECK(m2.beta() == -1);
  const auto p2 = SimilarityFamily::make(2, Branch::plus);
  CHECK(p2.a() == 5);
  CHECK(p2.c() == -3);
  CHECK(p2.beta() == 1);
  const auto m5 = SimilarityFamily::make(5, Branch::minus);
  CHECK(m5.a() == Rational(-3, 2));
  CHECK(m5.beta() == Rational(-1, 4));
  for (int M = 2; M <= 8; ++M)
    for (Branch b : {Branch::minus, Branch::plus}) {
      const auto f = SimilarityFamily::make(M, b);
      CHECK(f.a() + 2 * f.c() + 1 == 0);
    }
  CHECK_THROWS_AS(SimilarityFamily::make(1, Branch::minus), std::invalid_argument);
  CHECK_THROWS_AS(parse_branch("sideways"), std::invalid_argument);
  CHECK(parse_branch(to_string(Branch::plus)) == Branch::plus);
}

TEST_CASE("p_solution examples") {
  const TRExpr minus = alpha_term(-3) + TRExpr::term(AlphaPoly(Rational(-1, 2)), -1, 2);
  CHECK(p_solution(SimilarityFamily::make(2, Branch::minus)) == minus);
  const TRExpr plus = alpha_term(5) + TRExpr::term(AlphaPoly(Rational(1, 2)), -1, 2);
  CHECK(p_solution(SimilarityFamily::make(2, Branch::plus)) == plus);
}

TEST_CASE("both branches solve the PDE symbolically for every alpha") {
  for (int M = 2; M <= 8; ++M)
    for (Branch b : {Branch::minus, Branch::plus}) {
      CAPTURE(M);
      const auto fam = SimilarityFamily::make(M, b);
      const TRExpr p = p_solution(fam);
      CHECK(eq18_residual(p, M).is_zero());
      CHECK(reduced_ode_residual(fam.a(), M, fam.beta()).is_zero());
      CHECK(uniform_similarity_weight(eq18_summands(p, M), fam.c(), fam.a() - 2));
      CHECK_FALSE(uniform_similarity_weight(eq18_summands(p, M), fam.c(), fam.a() - 1));
    }
}

TEST_CASE("residual examples") {
  CHECK(eq18_residual(alpha_term(1), 3).is_zero());
  // p = alpha tau^2: only p_tt = 2 alpha survives
  CHECK(eq18_residual(alpha_term(2), 3) == TRExpr::term(AlphaPoly(Rational(2)) * kAlpha, 0, 0));
  CHECK(eq18_summands(alpha_term(2), 3).size() == 5);
}

TEST_CASE("perturbed parameters are not solutions") {
  for (int M = 2; M <= 5; ++M) {
    const auto fam = SimilarityFamily::make(M, Branch::minus);
    const Rational bad_beta = fam.beta() + Rational(1, 100);
    CHECK_FALSE(eq18_residual(p_from_parameters(fam.a(), fam.c(), bad_beta), M).is_zero());
    CHECK_FALSE(reduced_ode_residual(fam.a(), M, bad_beta).is_zero());
  }
  CHECK_FALSE(reduced_ode_residual(1, 2, 1).is_zero());
}

TEST_CASE("numeric cross-check") {
  const auto m2 = SimilarityFamily::make(2, Branch::minus);
  CHECK(eq18_residual_numeric(p_solution(m2), 2, Grid{}, 1.0) < 1e-12);
  const auto p3 = SimilarityFamily::make(3, Branch::plus);
  CHECK(eq18_residual_numeric(p_solution(p3), 3, Grid{}, -2.0) < 1e-12);
  const TRExpr off = p_from_parameters(m2.a(), m2.c(), m2.beta() + Rational(1, 100));
  CHECK(eq18_residual_numeric(off, 2, Grid{}, 1.0) > 1e-4);
}

TEST_CASE("finite-difference PDE oracle agrees") {
  for (int M : {2, 3, 6})
    for (Branch b : {Branch::minus, Branch::plus})
      for (double alpha : {1.0, -0.7}) {
        const auto fam = SimilarityFamily::make(M, b);
        const TRExpr p = p_solution(fam);
        const auto fn = [&](double tau, double r) { return p.eval(tau, r, alpha); };
        for (double tau : {1.0, 1.5})
          for (double r : {0.3, 0.8}) {
            CAPTURE(M);
            CHECK(fd_pde_residual(fn, M, tau, r) < 1e-4);
          }
        const TRExpr off = p_from_parameters(fam.a(), fam.c(), fam.beta() * 2);
        const auto fn_off = [&](double tau, double r) { return off.eval(tau, r, alpha); };
        CHECK(fd_pde_residual(fn_off, M, 1.2, 0.5) > 1e-2);
      }
}

TEST_CASE("TRExpr calculus") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const TRExpr e = random_trexpr(rng);
    const TRExpr f = random_trexpr(rng);
    CHECK(e.d_tau().d_r() == e.d_r().d_tau());
    CHECK((e * f).d_r() == e.d_r() * f + e * f.d_r());
    CHECK((e - e).is_zero());
  }
  const TRExpr x = TRExpr::term(AlphaPoly(Rational(3)), Rational(1, 2), 2);
  CHECK(x.d_tau() == TRExpr::term(AlphaPoly(Rational(3, 2)), Rational(-1, 2), 2));
  CHECK(x.shift_r(-2) == TRExpr::term(AlphaPoly(Rational(3)), Rational(1, 2), 0));
  CHECK(x.eval(4.0, 2.0, 0.0) == doctest::Approx(24.0));
  CHECK(AlphaPoly::alpha().eval(2.5) == 2.5);
  CHECK((kAlpha * kAlpha - kAlpha * kAlpha).is_zero());
}
