// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "igarima/special.hpp"

using namespace igarima;
using namespace igarima::special;

namespace {
constexpr double kInvE = 0.36787944117144233;

double residual(double w, double z) { return std::abs(w * std::exp(w) - z); }
}  // namespace

TEST_CASE("lambert_w0 basic values") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(residual(lambert_w0(std::exp(1.0)), std::exp(1.0)) <=
        1e-12 * std::exp(1.0));
  CHECK(std::abs(lambert_w0(std::exp(1.0)) - 1.0) < 1e-14);
  CHECK(lambert_w0(-kInvE) == doctest::Approx(-1.0).epsilon(1e-12));

  // reference values
  CHECK(lambert_w0(0.5) == doctest::Approx(0.35173371124919583).epsilon(1e-14));
  CHECK(lambert_w0(10.0) == doctest::Approx(1.7455280027406994).epsilon(1e-14));
  CHECK(lambert_w0(-0.2) == doctest::Approx(-0.25917110181907375).epsilon(1e-14));
}

TEST_CASE("lambert_w0 residual contract across the domain") {
  const double grid[] = {-kInvE + 1e-14, -0.3666, -0.25, -0.1, -1e-8,
                         1e-8,           0.1,     1.0,   3.0,  1e3,
                         1e8,            1e300};
  for (double z : grid) {
    const double w = lambert_w0(z);
    CHECK(w >= -1.0);
    CHECK(residual(w, z) <= 1e-12 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("lambert_w0 domain error") {
  CHECK_THROWS_AS(lambert_w0(-0.4), std::domain_error);
  CHECK_THROWS_AS(lambert_w0(-1.0), std::domain_error);
}

TEST_CASE("lambert_wm1 branch point and simple points") {
  CHECK(lambert_wm1(-kInvE) == doctest::Approx(-1.0).epsilon(1e-12));
  const double z2 = -2.0 * std::exp(-2.0);
  CHECK(lambert_wm1(z2) == doctest::Approx(-2.0).epsilon(1e-13));
  CHECK(residual(lambert_wm1(z2), z2) <= 1e-13 * std::abs(z2));
}

TEST_CASE("lambert_wm1 reference values") {
  CHECK(lambert_wm1(-0.1) == doctest::Approx(-3.5771520639572972).epsilon(1e-14));
  CHECK(lambert_wm1(-0.3) == doctest::Approx(-1.7813370234216276).epsilon(1e-14));
  CHECK(lambert_wm1(-0.2) == doctest::Approx(-2.5426413577735264).epsilon(1e-14));
  CHECK(lambert_wm1(-0.01) == doctest::Approx(-6.4727751243940047).epsilon(1e-14));
  CHECK(lambert_wm1(-1e-6) == doctest::Approx(-16.626508901372473).epsilon(1e-14));
}

TEST_CASE("lambert_wm1 residual contract on the domain grid") {
  const double grid[] = {-kInvE,  -0.36787, -0.3675, -0.36, -0.35,
                         -0.3,    -0.28,    -0.27,   -0.26, -0.2,
                         -0.1,    -0.01,    -1e-6};
  for (double z : grid) {
    const double w = lambert_wm1(z);
    CHECK(w <= -1.0);
    CHECK(residual(w, z) <= 1e-12 * std::abs(z));
  }
  // deep tail: the log-form iteration must not underflow
  for (double z : {-1e-30, -1e-100, -1e-250}) {
    const double w = lambert_wm1(z);
    CHECK(w < -60.0);
    CHECK(std::abs(w + std::log(-w) - std::log(-z)) <= 1e-12 * std::abs(std::log(-z)));
  }
}

TEST_CASE("lambert branches separate on (-1/e, 0)") {
  for (double z : {-0.36, -0.3, -0.2, -0.1, -0.01, -1e-4}) {
    CHECK(lambert_wm1(z) < lambert_w0(z));
  }
}

TEST_CASE("lambert_wm1 domain errors") {
  CHECK_THROWS_AS(lambert_wm1(0.0), std::domain_error);
  CHECK_THROWS_AS(lambert_wm1(0.5), std::domain_error);
  CHECK_THROWS_AS(lambert_wm1(-0.5), std::domain_error);
}

TEST_CASE("integrate: exponential tails over the half line") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, inf, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Gamma(2, rate 2) density
  CHECK(integrate([](double x) { return 4.0 * x * std::exp(-2.0 * x); }, 0.0,
                  inf, 1e-12) == doctest::Approx(1.0).epsilon(1e-12));
  // second moment of Exponential(1)
  CHECK(integrate([](double x) { return x * x * std::exp(-x); }, 0.0, inf,
                  1e-12) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("integrate: finite intervals") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // integrable endpoint singularity
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                  1e-9) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("integrate: failure carries the best estimate") {
  const auto f = [](double x) { return 1.0 / std::sqrt(x); };
  const IntegralResult r = integrate_result(f, 0.0, 1.0, 1e-13, 8);
  CHECK_FALSE(r.converged);
  try {
    integrate(f, 0.0, 1.0, 1e-13, 8);
    FAIL("expected IntegrationError");
  } catch (const IntegrationError& err) {
    CHECK(err.best().value == doctest::Approx(2.0).epsilon(0.2));
    CHECK(err.best().error > 0.0);
  }
}

TEST_CASE("integrate rejects bad arguments") {
  CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 0.0, 1.0, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 2.0, 1.0, 1e-10),
                  std::invalid_argument);
}

TEST_CASE("find_root solves simple equations") {
  CHECK(find_root([](double x) { return x - 3.0; }, 0.0, 10.0, 1e-13) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(find_root([](double x) { return std::exp(-x) - 0.5; }, 0.0, 10.0,
                  1e-13) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("find_root is deterministic") {
  const auto g = [](double x) { return std::cos(x) - x; };
  const double a = find_root(g, 0.0, 1.0, 1e-14);
  const double b = find_root(g, 0.0, 1.0, 1e-14);
  CHECK(a == b);  // bit-for-bit
  CHECK(std::abs(g(a)) < 1e-12);
}

TEST_CASE("find_root requires a sign change") {
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0,
                            1e-12),
                  std::invalid_argument);
}

TEST_CASE("minimize locates interior minima") {
  CHECK(minimize([](double x) { return (x - 2.0) * (x - 2.0); }, 0.0, 10.0,
                 1e-10) == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(minimize([](double x) { return std::cosh(x - 0.25); }, -4.0, 7.0,
                 1e-10) == doctest::Approx(0.25).epsilon(1e-6));
}
