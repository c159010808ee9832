#include <cmath>
#include <numbers>

#include <doctest.h>

#include "turancert/quadrature.hpp"

using namespace turancert;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("single panel reproduces polynomial integrals") {
  auto [value, error] = gauss_kronrod_15([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(error < 1e-12);
}

TEST_CASE("adaptive quadrature handles oscillatory integrands") {
  auto res = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(res.value - 2.0) <= res.error + 1e-13);

  auto osc = integrate_adaptive([](double x) { return std::cos(40.0 * x); }, 0.0, 2.0 * kPi, 1e-11);
  CHECK(osc.converged);
  CHECK(std::abs(osc.value) < 1e-11);
}

TEST_CASE("adaptive quadrature reports nonconvergence on a tiny budget") {
  auto res = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x + 1e-300); }, 0.0, 1.0,
                                1e-14, 4);
  CHECK(!res.converged);
}

TEST_CASE("panel integration matches the adaptive route") {
  auto f = [](double x) { return std::exp(-x * x) * std::cos(7.0 * x); };
  auto a = integrate_adaptive(f, -6.0, 6.0, 1e-12);
  auto p = integrate_panels(f, -6.0, 6.0, 0.5, 1e-12);
  CHECK(a.converged);
  CHECK(p.converged);
  CHECK(p.value == doctest::Approx(a.value).epsilon(1e-11));
}
