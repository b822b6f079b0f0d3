#include <doctest.h>

#include "oracles.hpp"
#include "zmc/slices.hpp"

#include <cmath>
#include <stdexcept>

using namespace zmc::slices;

TEST_CASE("profile function examples") {
  for (int M = 1; M <= 5; ++M) CHECK(Profile{M, 1.0}.f(1.0) == 2.0);
  CHECK(Profile{2, 1.0}.f(0.0) == 0.0);
  CHECK(Profile{2, 1.0}.f_prime(0.0) == 1.0);
  CHECK(Profile{2, 3.0}.f(1.0) == 4.0);
  CHECK(Profile{2, 3.0}.f_prime(1.0) == 16.0);
  CHECK_THROWS_AS((Profile{0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Profile{2, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Profile{2, -1.0}.validate()), std::invalid_argument);
}

TEST_CASE("kappa_max exact cases and bisection oracle") {
  CHECK(std::abs(Profile{2, 1.0}.kappa_max(1.0) - 1.0) <= 1e-12);
  CHECK(std::abs(Profile{2, 3.0}.kappa_max(2.0) - 1.0) <= 1e-12);
  const double oracle_root = oracle::bisect([](double k) { return k + std::pow(k, 5) - 0.2; }, 0.0, 1.0);
  CHECK(oracle_root == doctest::Approx(0.19968).epsilon(1e-4));
  CHECK(std::abs(Profile{2, 1.0}.kappa_max(0.1) - oracle_root) <= 1e-12 * oracle_root);
  CHECK(Profile{2, 1.0}.kappa_max(0.0) == 0.0);
  CHECK_THROWS_AS((Profile{2, 1.0}.kappa_max(-1.0)), std::domain_error);
  CHECK(kappa_max(SliceParams{Profile{2, 1.0}, 1.0}) == Profile{2, 1.0}.kappa_max(1.0));
}

TEST_CASE("kappa_max agrees with the bisection oracle across parameters") {
  for (int M = 1; M <= 4; ++M)
    for (double C : {0.01, 0.5, 1.0, 7.0, 100.0})
      for (double t : {1e-3, 0.1, 0.5, 1.0, 2.5, 10.0}) {
        const Profile prof{M, C};
        const double ref = oracle::bisect([&](double k) { return prof.f(k) - 2.0 * t; }, 0.0, 2.0 * t + 1.0);
        CHECK(std::abs(prof.kappa_max(t) - ref) <= 1e-12 * std::max(ref, 1e-300) + 1e-15);
      }
}

TEST_CASE("kappa_max increases with t and f' >= 1") {
  for (int M = 1; M <= 4; ++M) {
    const Profile prof{M, 2.0};
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = 0.1 + 4.9 * i / 100.0;
      const double k = prof.kappa_max(t);
      CHECK(k > prev);
      prev = k;
      for (int j = 0; j <= 20; ++j) CHECK(prof.f_prime(k * j / 20.0) >= 1.0);
    }
  }
}

TEST_CASE("slice_point examples") {
  const SliceParams p{Profile{2, 1.0}, 1.0};
  const auto cap = slice_point(kappa_max(p), p);
  CHECK(cap.r == 0.0);
  CHECK(cap.z == doctest::Approx(0.0).epsilon(1e-12));
  const auto base = slice_point(0.0, p);
  CHECK(base.r == 0.0);
  CHECK(base.z == -1.0);
  const auto mid = slice_point(0.5, p);
  CHECK(mid.r * mid.r == doctest::Approx(0.734375).epsilon(1e-15));
  CHECK(mid.z == -0.5);
  CHECK_THROWS_AS(slice_point(1.1, p), std::domain_error);
  CHECK_THROWS_AS(slice_point(-0.1, p), std::domain_error);
}

TEST_CASE("slice_profile shape") {
  const SliceParams p{Profile{3, 2.0}, 1.5};
  const auto prof = slice_profile(p, 41);
  REQUIRE(prof.size() == 41);
  CHECK(prof.front().r == 0.0);
  CHECK(prof.back().r == 0.0);
  CHECK(prof.front().kappa == 0.0);
  CHECK(prof.back().kappa == kappa_max(p));
  for (std::size_t i = 1; i + 1 < prof.size(); ++i) {
    CHECK(prof[i].r > 0.0);
    CHECK(prof[i].kappa > prof[i - 1].kappa);
    const double gap = 2.0 * p.t - p.profile.f(prof[i].kappa);
    CHECK(prof[i].r * prof[i].r == doctest::Approx(prof[i].kappa * gap).epsilon(1e-13));
  }
  CHECK_THROWS_AS(slice_profile(p, 2), std::invalid_argument);
}

TEST_CASE("slices shrink to a point as t -> 0") {
  double prev = INFINITY;
  for (double t : {1.0, 0.1, 1e-2, 1e-3, 1e-4}) {
    double rmax = 0.0;
    for (const auto& s : slice_profile(SliceParams{Profile{2, 1.0}, t}, 64)) rmax = std::max(rmax, s.r);
    CHECK(rmax < prev);
    prev = rmax;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("slice at -t mirrors the slice at t") {
  const Profile prof{2, 1.5};
  const auto pos = slice_profile(SliceParams{prof, 0.8}, 33);
  const auto neg = slice_profile(SliceParams{prof, -0.8}, 33);
  REQUIRE(pos.size() == neg.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    CHECK(neg[i].kappa == -pos[i].kappa);
    CHECK(neg[i].z == -pos[i].z);
    CHECK(neg[i].r == pos[i].r);
  }
}

TEST_CASE("convexity examples and grid") {
  CHECK(convexity_check(SliceParams{Profile{2, 1.0}, 1.0}, 200));
  CHECK(convexity_check(SliceParams{Profile{4, 10.0}, 0.5}, 200));
  for (int M : {2, 3, 4})
    for (double C : {0.1, 0.5, 1.0, 3.0, 10.0})
      for (double t : {0.05, 0.3, 1.0, 2.0, 5.0}) CHECK(convexity_check(SliceParams{Profile{M, C}, t}, 64));
  CHECK(convexity_check(SliceParams{Profile{2, 1.0}, -1.0}, 64));
  CHECK_THROWS_AS(convexity_check(SliceParams{Profile{2, 1.0}, 1.0}, 8), std::invalid_argument);
}

TEST_CASE("convexity_check rejects a profile built from a non-monotone f") {
  // r^2 = kappa (2t - g(kappa)) with g dipping between 0.3 and 0.6
  auto g = [](double k) { return k - 0.9 * std::sin(10.0 * k) * k * (1.0 - k); };
  const double t = 0.5;
  std::vector<double> z, r;
  for (int i = 0; i <= 64; ++i) {
    const double k = i / 64.0;
    z.push_back(-t + k);
    r.push_back(std::sqrt(std::max(0.0, k * (2.0 * t - g(k)))));
  }
  CHECK_FALSE(convexity_check(z, r));
  // the real profile on the same grid is fine
  const Profile prof{2, 1.0};
  const double km = prof.kappa_max(t);
  z.clear();
  r.clear();
  for (int i = 0; i <= 64; ++i) {
    const double k = km * i / 64.0;
    z.push_back(-t + k);
    r.push_back(std::sqrt(std::max(0.0, k * (2.0 * t - prof.f(k)))));
  }
  CHECK(convexity_check(z, r));
  const std::vector<double> zbad{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(convexity_check(zbad, r), std::invalid_argument);
}
