#include "turancert/serialization.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace turancert {

namespace {

using nlohmann::json;

json json_double(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json norm_estimate_json(const NormEstimate& est) {
  json j;
  j["value"] = json_double(est.value);
  j["lower"] = json_double(est.lower);
  j["upper"] = json_double(est.upper);
  j["grid_points"] = est.grid_points;
  j["truncation_radius"] = json_double(est.truncation_radius);
  return j;
}

json oscillation_json(const OscillationReport& rep) {
  json j;
  j["r"] = json_double(rep.r);
  j["plus_mass"] = json_double(rep.plus_mass);
  j["minus_mass"] = json_double(rep.minus_mass);
  j["quad_error"] = json_double(rep.quad_error);
  j["sup_norm_used"] = norm_estimate_json(rep.sup_norm_used);
  j["threshold"] = json_double(rep.threshold);
  return j;
}

}  // namespace

std::string to_json(const WitnessCertificate& cert) {
  json j;
  j["lambda"] = json_double(cert.lambda);
  j["n"] = cert.n;
  j["n0_paper"] = cert.n0_paper ? json_double(*cert.n0_paper) : json(nullptr);
  j["ratio_lower"] = json_double(cert.ratio_lower);
  j["threshold"] = json_double(cert.threshold);
  j["passed"] = cert.passed;
  j["sup_norm"] = norm_estimate_json(cert.sup_norm);
  j["deriv_norm"] = norm_estimate_json(cert.deriv_norm);
  j["tail_bound"] = json_double(cert.tail_bound);
  j["p_infty_lower"] = json_double(cert.p_infty_lower);
  if (cert.oscillation) j["oscillation"] = oscillation_json(*cert.oscillation);
  return j.dump(2) + "\n";
}

std::string to_json(const OscillationReport& report) {
  return oscillation_json(report).dump(2) + "\n";
}

std::string to_json(const FrameBounds& bounds) {
  json j;
  j["lambda"] = json_double(bounds.lambda);
  j["mu"] = json_double(bounds.mu);
  j["big_m"] = json_double(bounds.big_m);
  j["omega_grid"] = bounds.omega_grid;
  j["l_truncation"] = bounds.l_truncation;
  return j.dump(2) + "\n";
}

std::string to_json(const TranslateNetwork& net) {
  json j;
  j["lambda"] = json_double(net.lambda());
  json coeffs = json::array();
  for (const auto& [k, c] : net.coefficients()) coeffs.push_back(json::array({k, c}));
  j["coefficients"] = coeffs;
  return j.dump(2) + "\n";
}

TranslateNetwork network_from_json(const std::string& text) {
  const json j = json::parse(text);
  const double lambda = j.at("lambda").get<double>();
  TranslateNetwork::Coefficients coeffs;
  for (const auto& entry : j.at("coefficients")) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("network_from_json: coefficients must be [index, value] pairs");
    coeffs.emplace_back(entry[0].get<int>(), entry[1].get<double>());
  }
  return TranslateNetwork(lambda, std::move(coeffs));
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (res.ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

}  // namespace turancert
