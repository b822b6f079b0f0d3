#include <doctest.h>

#include "oracles.hpp"
#include "zmc/field_expr.hpp"
#include "zmc/symalg.hpp"

#include <cmath>
#include <stdexcept>
#include <random>

using zmc::FieldExpr;
using zmc::Rational;

namespace {

FieldExpr u(int D, Rational p = 1) { return FieldExpr::u_power(D, p); }
FieldExpr v(int D) { return FieldExpr::v_power(D, 1); }
FieldExpr x(int D, int a) { return FieldExpr::coordinate(D, a); }

}  // namespace

TEST_CASE("ring operation examples") {
  CHECK(u(4) * u(4, Rational(1, 2)) == u(4, Rational(3, 2)));
  CHECK((x(4, 0) * u(4, 2) - x(4, 0) * u(4, 2)).is_zero());
  CHECK((x(4, 0) * u(4, 2) + (-(x(4, 0) * u(4, 2)))).terms().empty());
  const FieldExpr phi = zmc::symalg::quadratic_form(zmc::DiagonalMetric::minkowski(4));
  CHECK(zmc::mul(phi, FieldExpr::constant(4, 1)) == phi);
  CHECK(zmc::add(phi, FieldExpr(4)) == phi);
  CHECK(zmc::scale(phi, 0).is_zero());
  CHECK(zmc::scale(phi, 2) == phi + phi);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(u(4) + u(5), std::invalid_argument);
  CHECK_THROWS_AS(u(4) * u(5), std::invalid_argument);
  CHECK_THROWS(FieldExpr::coordinate(4, 2));
}

TEST_CASE("no stored coefficient is zero") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_expr(rng, 5, 6, true);
    const auto b = oracle::random_expr(rng, 5, 6, true);
    for (const auto& e : {a + b, a - b, a * b, a - a})
      for (const auto& [key, c] : e.terms()) CHECK(sgn(c) != 0);
  }
}

TEST_CASE("ring laws hold on seeded random expressions") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const bool frac = trial % 2 == 1;
    const int D = 3 + trial % 4;
    const auto a = oracle::random_expr(rng, D, 5, frac);
    const auto b = oracle::random_expr(rng, D, 5, frac);
    const auto c = oracle::random_expr(rng, D, 5, frac);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("partial derivatives match centered finite differences") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int D = 3 + trial % 4;
    const auto e = oracle::random_expr(rng, D, 4, trial % 2 == 0);
    std::vector<double> p(static_cast<std::size_t>(D));
    for (auto& c : p) c = oracle::uniform(rng, -1.0, 1.0);
    // keep u = t + z in [0.5, 1.5]
    const double want_u = oracle::uniform(rng, 0.5, 1.5);
    p.front() = 0.5 * (want_u + p.front());
    p.back() = want_u - p.front();
    const oracle::ScalarField F = [&](std::span<const double> q) { return e.eval(q); };
    const auto fd = oracle::fd_gradient(F, p, 1e-5);
    for (int mu = 0; mu < D; ++mu) {
      const double exact = zmc::symalg::partial(e, mu).eval(p);
      const double scale = std::max({std::abs(exact), std::abs(e.eval(p)), 1.0});
      CHECK(std::abs(exact - fd[static_cast<std::size_t>(mu)]) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("eval examples and domain") {
  const std::vector<double> origin_t1{1.0, 0.0, 0.0};
  CHECK((u(3) * v(3)).eval(origin_t1) == 1.0);
  CHECK(u(3, Rational(1, 2)).eval(std::vector<double>{0.5, 0.0, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(u(3, Rational(1, 2)).eval(std::vector<double>{-1.0, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(u(3, -1).eval(std::vector<double>{1.0, 0.0, -1.0}), std::domain_error);
  // integer exponents evaluate at u < 0
  CHECK(u(3, 3).eval(std::vector<double>{-1.0, 0.0, -1.0}) == -8.0);
  CHECK_THROWS_AS(u(3).eval(std::vector<double>{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("exact evaluation agrees with floating evaluation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto e = oracle::random_expr(rng, 4, 5, false);
    std::vector<Rational> q;
    std::vector<double> p;
    for (int i = 0; i < 4; ++i) {
      Rational r(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 3) + 2);
      r.canonicalize();
      q.push_back(r);
      p.push_back(r.get_d());
    }
    const double exact = e.eval_exact(q).get_d();
    CHECK(e.eval(p) == doctest::Approx(exact).epsilon(1e-12));
    CHECK(e.compile().eval(p) == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("serialization is deterministic and sorted") {
  const FieldExpr e = u(4, 2) * v(4) + x(4, 1) * x(4, 1) * Rational(-1, 2) + FieldExpr::constant(4, 3);
  const std::string s = e.to_string();
  CHECK(s == (FieldExpr::constant(4, 3) + u(4, 2) * v(4) - Rational(1, 2) * x(4, 1) * x(4, 1)).to_string());
  CHECK(s.find("1/2") != std::string::npos);
  CHECK(FieldExpr(4).to_string() == "0");
  CHECK(u(4, Rational(-3, 2)).to_string() == "1 * u^-3/2");
}
