#include "turancert/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "turancert/errors.hpp"
#include "turancert/quadrature.hpp"

namespace turancert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOscillationRadiusFactor = 512.0 / kPi;  // 8^3 / pi
constexpr std::size_t kMaxSignChanges = 10000;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Fraction of the scaled Fejer kernel mass outside [-T, T], i.e.
// 1 - (2pi)^{-1/2} int_{|t|<=T} r h(rt) dt. For large U = rT the integral
// tail has the expansion (2/pi)(1/U + sin U / U^2 - 2 cos U / U^3) with
// remainder below 2/U^3.
double fejer_mass_outside(double r, double T) {
  const double U = r * T;
  if (U < 64.0) {
    auto res = integrate_adaptive([r](double t) { return fejer_scaled(r, t); }, 0.0, T,
                                  1e-13, 20000);
    if (!res.converged)
      throw quadrature_error("fejer_mass_outside: kernel quadrature did not converge");
    return std::max(0.0, 1.0 - 2.0 * res.value / std::sqrt(2.0 * kPi));
  }
  const double u2 = U * U;
  return (2.0 / kPi) * (1.0 / U + std::sin(U) / u2 - 2.0 * std::cos(U) / (u2 * U));
}

}  // namespace

bool OscillationReport::passed(double rel_slack) const {
  const double mass = std::min(plus_mass, minus_mass) - quad_error;
  return mass >= threshold * (1.0 - rel_slack);
}

OscillationReport signed_part_integrals(const FourierProfile& profile, double r, double tol) {
  if (!(r > 0.0)) throw std::invalid_argument("signed_part_integrals: r must be > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("signed_part_integrals: tol must be > 0");
  if (!profile.is_real())
    throw std::invalid_argument("signed_part_integrals: profile must be real-valued");

  OscillationReport rep;
  rep.r = r;
  if (profile.coeff_abs_sum() == 0.0) return rep;

  const double r_eff = std::min(r, profile.band_radius());
  double band_tail = 0.0;
  if (r > r_eff) {
    // |profile| <= abs_sum * gaussian_hat past the band radius
    band_tail = profile.coeff_abs_sum() * std::sqrt(2.0 * kPi) * std::erfc(r_eff / 2.0);
  }

  // Locate the sign changes of the profile on [-r_eff, r_eff].
  const double step = std::min(profile.scan_step(), r_eff / 8.0);
  std::vector<double> cuts;
  cuts.push_back(-r_eff);
  double prev_x = -r_eff;
  double prev_v = profile(prev_x);
  for (double x = -r_eff + step; x < r_eff + step / 2.0; x += step) {
    const double xc = std::min(x, r_eff);
    const double v = profile(xc);
    if (sign_of(prev_v) != 0 && sign_of(v) != 0 && sign_of(prev_v) != sign_of(v)) {
      double a = prev_x, b = xc, fa = prev_v;
      while (b - a > 1e-13) {
        const double mid = 0.5 * (a + b);
        const double fm = profile(mid);
        if (sign_of(fm) == 0) { a = b = mid; break; }
        if (sign_of(fm) == sign_of(fa)) { a = mid; fa = fm; } else { b = mid; }
      }
      cuts.push_back(0.5 * (a + b));
      if (cuts.size() > kMaxSignChanges)
        throw pathological_profile_error("signed_part_integrals: more than 10^4 sign changes");
    }
    prev_x = xc;
    prev_v = v;
  }
  cuts.push_back(r_eff);

  const double per_panel_tol = tol / static_cast<double>(cuts.size());
  double plus = 0.0, minus = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (b <= a) continue;
    auto res = integrate_adaptive(profile, a, b, per_panel_tol, 40000);
    if (!res.converged)
      throw quadrature_error("signed_part_integrals: panel quadrature did not converge");
    const double mid_sign = profile(0.5 * (a + b));
    if (mid_sign >= 0.0) plus += std::max(0.0, res.value);
    else minus += std::max(0.0, -res.value);
    err += res.error;
  }

  rep.plus_mass = plus;
  rep.minus_mass = minus;
  rep.quad_error = err + band_tail;
  return rep;
}

OscillationReport oscillation_certificate(const TranslateNetwork& net, double safety, double tol) {
  if (!(safety >= 1.0)) throw std::invalid_argument("oscillation_certificate: safety must be >= 1");
  if (net.coeff_abs_sum() == 0.0)
    throw hypothesis_error("oscillation_certificate: zero network has no certified norm ratio");
  const double origin_tol = 1e-12 * std::max(1.0, net.coeff_abs_sum());
  if (std::abs(net(0.0)) > origin_tol)
    throw hypothesis_error("oscillation_certificate: network does not vanish at the origin");

  const double scale = coarse_sup_estimate(net);
  const double gap = 1e-6 * scale;
  const NormEstimate sup = sup_norm(net, gap);
  const NormEstimate deriv = sup_norm_derivative(net, gap);
  if (!(sup.lower > 0.0))
    throw hypothesis_error("oscillation_certificate: sup norm not certified away from zero");

  // Conservative interval ends: r is never underestimated.
  const double ratio_upper = deriv.upper / sup.lower;
  const double r = safety * kOscillationRadiusFactor * ratio_upper;

  OscillationReport rep = signed_part_integrals(analytic_fourier_transform(net), r, tol);
  rep.sup_norm_used = sup;
  rep.threshold = std::sqrt(2.0 * kPi) / 4.0 * sup.upper;
  return rep;
}

double fejer_smoothing_error(const TranslateNetwork& net, double r,
                             const std::vector<double>& x_samples) {
  if (!(r > 0.0)) throw std::invalid_argument("fejer_smoothing_error: r must be > 0");
  if (net.coeff_abs_sum() == 0.0 || x_samples.empty()) return 0.0;

  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  const double scale = std::max(coarse_sup_estimate(net), 1e-300);
  const double reach = net.lambda() * static_cast<double>(net.max_abs_index());
  const double panel = 2.0 * kPi / r;

  double worst = 0.0;
  for (const double x : x_samples) {
    const double T = std::abs(x) + reach + 9.0;
    auto integrand = [&net, r, x](double t) { return net(x - t) * fejer_scaled(r, t); };
    auto res = integrate_panels(integrand, -T, T, panel, 1e-8 * scale);
    if (!res.converged)
      throw quadrature_error("fejer_smoothing_error: convolution quadrature did not converge");
    const double outside = fejer_mass_outside(r, T);
    const double defect = norm * res.value - net(x) * (1.0 - outside);
    worst = std::max(worst, std::abs(defect));
  }
  return worst;
}

}  // namespace turancert
