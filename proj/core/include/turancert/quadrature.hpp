#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace turancert {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;        // rigorous-style estimate of the absolute error
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

// One G7/K15 panel. Returns the Kronrod value; the error estimate uses the
// QUADPACK rescaling of |K15 - G7| against the deviation integral.
template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double resg = fc * detail::kGaussWeights[3];
  double resk = fc * detail::kKronrodWeights[7];
  double resabs = std::abs(resk);

  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double absc = half * detail::kKronrodNodes[j];
    const double f1 = f(center - absc);
    const double f2 = f(center + absc);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += detail::kKronrodWeights[j] * (f1 + f2);
    resabs += detail::kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += detail::kGaussWeights[j / 2] * (f1 + f2);
  }

  const double reskh = resk * 0.5;
  double resasc = detail::kKronrodWeights[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += detail::kKronrodWeights[j] *
              (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  resasc *= std::abs(half);
  resabs *= std::abs(half);

  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::max(eps * 50.0 * resabs, err);

  return {resk * half, err};
}

// Globally adaptive integration over [a, b]: repeatedly bisect the interval
// with the largest error estimate until the total is below abs_tol or the
// interval budget runs out.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    std::size_t max_intervals = 100000) {
  struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
  };

  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }

  auto [v0, e0] = gauss_kronrod_15(f, a, b);
  res.evaluations = 15;

  std::priority_queue<Interval> queue;
  queue.push({a, b, v0, e0});
  double total_value = v0;
  double total_error = e0;
  std::size_t n_intervals = 1;

  while (total_error > abs_tol && n_intervals < max_intervals) {
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable at double precision
      queue.push(worst);
      break;
    }
    auto [vl, el] = gauss_kronrod_15(f, worst.a, mid);
    auto [vr, er] = gauss_kronrod_15(f, mid, worst.b);
    res.evaluations += 30;
    total_value += vl + vr - worst.value;
    total_error += el + er - worst.error;
    queue.push({worst.a, mid, vl, el});
    queue.push({mid, worst.b, vr, er});
    ++n_intervals;
  }

  // Recompute the totals from the queue to shed accumulated cancellation.
  double value = 0.0, error = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  res.value = value;
  res.error = error;
  res.converged = error <= abs_tol;
  return res;
}

// Fixed panel decomposition: one G7/K15 rule per panel of width `panel`,
// bisecting only panels whose error estimate stays above its share of the
// tolerance. Suited to integrands with a known uniform oscillation scale.
template <class F>
QuadratureResult integrate_panels(F&& f, double a, double b, double panel,
                                  double abs_tol) {
  QuadratureResult res;
  if (a >= b) {
    res.converged = true;
    return res;
  }
  const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / panel)));
  const double h = (b - a) / static_cast<double>(n);
  const double tol_share = abs_tol / static_cast<double>(n);
  double value = 0.0, error = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pa = a + h * static_cast<double>(i);
    const double pb = (i + 1 == n) ? b : pa + h;
    auto [v, e] = gauss_kronrod_15(f, pa, pb);
    res.evaluations += 15;
    if (e > tol_share) {
      auto sub = integrate_adaptive(f, pa, pb, tol_share, 4000);
      res.evaluations += sub.evaluations;
      v = sub.value;
      e = sub.error;
    }
    value += v;
    error += e;
  }
  res.value = value;
  res.error = error;
  res.converged = error <= abs_tol;
  return res;
}

}  // namespace turancert
