#include <doctest.h>

#include <cmath>

#include "u1kepler/micz.hpp"
#include "u1kepler/radial.hpp"

using namespace u1kepler;

TEST_CASE("micz params validation") {
  CHECK_THROWS_AS(micz::MiczParams(HalfInt(1), HalfInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(micz::MiczParams(HalfInt::from_twice(1), HalfInt(1)),
                  std::invalid_argument);  // j - |mu| = 1/2
  const micz::MiczParams params(HalfInt::from_twice(1), HalfInt::from_twice(3));
  CHECK(params.angular_eigenvalue() == Rat(15, 4) - Rat(1, 4));
}

TEST_CASE("sector correspondence") {
  SUBCASE("trivial") {
    const auto match = micz::sector_correspondence(0, 0);
    CHECK(match.micz.mu.twice() == 0);
    CHECK(match.micz.j.twice() == 0);
    CHECK(match.kepler_angular == 0);
    CHECK(match.pass);
  }
  SUBCASE("neutral l=1") {
    const auto match = micz::sector_correspondence(1, 0);
    CHECK(match.micz.j == HalfInt(1));
    CHECK(match.kepler_angular == 8);
    CHECK(match.micz_angular_x4 == 8);
    CHECK(match.pass);
  }
  SUBCASE("charged ground sector") {
    const auto match = micz::sector_correspondence(0, 2);
    CHECK(match.micz.mu == HalfInt(1));
    CHECK(match.micz.j == HalfInt(1));
    CHECK(match.kepler_angular == 4);
    CHECK(match.pass);
  }
  SUBCASE("exact across the table, including odd characters") {
    for (long long sb = -8; sb <= 8; ++sb)
      for (long long l = 0; l <= 12; ++l)
        CHECK(micz::sector_correspondence(l, sb).pass);
  }
}

TEST_CASE("spectrum correspondence") {
  SUBCASE("hydrogen limit") {
    const auto report = micz::spectrum_correspondence(0, 10);
    CHECK(report.all_pass());
    CHECK(report.lines[0].lhs == "-1/2");
    CHECK(report.lines[1].lhs == "1");
  }
  SUBCASE("frozen charged values") {
    const auto report = micz::spectrum_correspondence(2, 1);
    REQUIRE(report.lines.size() == 4);
    CHECK(report.lines[2].lhs == "-1/18");  // I=1: N = 3
    CHECK(report.lines[3].lhs == "8");      // (I+1)(I+1+|s|) = 2*4 = 9-1
    CHECK(report.all_pass());

    const auto negative = micz::spectrum_correspondence(-4, 0);
    CHECK(negative.lines[1].lhs == "5");  // 1*5 = 9 - 4
    CHECK(negative.all_pass());
  }
  SUBCASE("sweep") {
    for (long long sb = -8; sb <= 8; ++sb)
      CHECK(micz::spectrum_correspondence(sb, 10).all_pass());
  }
}

TEST_CASE("conjugation residuals") {
  const auto grid = micz::default_conjugation_grid();
  SUBCASE("exponential, neutral s-sector") {
    const double residual = micz::conjugation_residual(
        [](double r) { return std::exp(-r); }, 0, 0, grid, 1e-3);
    CHECK(residual < 1e-6);
  }
  SUBCASE("gaussian, charged sector") {
    const double residual = micz::conjugation_residual(
        [](double r) { return r * std::exp(-r * r); }, 1, 2, grid, 1e-3);
    CHECK(residual < 1e-6);
  }
  SUBCASE("hydrogen ground profile is a shared eigenfunction") {
    const auto hydrogen = [](double r) { return 2.0 * std::exp(-r); };
    CHECK(micz::conjugation_residual(hydrogen, 0, 0, grid, 1e-3) < 1e-6);
    // The conjugated inner function rho^{3/2} f(rho^2) solves the Kepler
    // radial equation with E = -1/2, so both sides equal -f/2 pointwise.
    const double eigen_residual = radial::radial_operator_residual(
        [&hydrogen](double rho) { return std::pow(rho, 1.5) * hydrogen(rho * rho); },
        0, repcore::ProblemParams(2, 0), -0.5, grid, 1e-3);
    CHECK(eigen_residual < 1e-7);
  }
  SUBCASE("whole fixed suite across sectors") {
    REQUIRE(micz::conjugation_test_suite().size() == 5);
    for (const auto& test : micz::conjugation_test_suite())
      for (long long sb = -4; sb <= 4; sb += 2)
        for (long long l = 0; l <= 2; ++l)
          CHECK(micz::conjugation_residual(test.fn, l, sb, grid, 1e-3) < 1e-6);
  }
  SUBCASE("bad test functions are rejected") {
    CHECK_THROWS_AS(micz::conjugation_residual(
                        [](double r) { return std::exp(r); }, 0, 0, grid, 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(micz::conjugation_residual(
                        [](double) { return 1.0; }, 0, 0, grid, 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        micz::conjugation_residual(
            [](double r) { return r > 1.0 ? std::nan("") : std::exp(-r); }, 0,
            0, grid, 1e-3),
        std::invalid_argument);
  }
}
