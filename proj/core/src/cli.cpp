#include "turancert/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "turancert/coefficients.hpp"
#include "turancert/errors.hpp"
#include "turancert/frames.hpp"
#include "turancert/selfcheck.hpp"
#include "turancert/serialization.hpp"

#include <json.hpp>

namespace turancert::cli {

namespace {

using nlohmann::json;

std::string csv_bool(bool b) { return b ? "true" : "false"; }

void validate(const RunConfig& config) {
  auto need = [](bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
  };
  switch (config.command) {
    case Command::certify:
      need(config.lambda.has_value(), "certify requires --lambda");
      need(!config.lambda_range.has_value(), "certify takes --lambda, not a range");
      break;
    case Command::sweep:
      need(config.lambda_range.has_value(), "sweep requires --lambda-min/--lambda-max/--steps");
      need(!config.lambda.has_value(), "sweep takes a range, not --lambda");
      need(!config.n_override.has_value(), "sweep does not take --n");
      break;
    case Command::coeffs:
      need(config.n_override.has_value(), "coeffs requires --n");
      need(!config.lambda.has_value() && !config.lambda_range.has_value(),
           "coeffs takes only --n");
      break;
    case Command::oscillation:
      need(config.lambda.has_value(), "oscillation requires --lambda");
      need(!config.lambda_range.has_value(), "oscillation takes --lambda, not a range");
      break;
    case Command::frame:
      need(config.lambda.has_value(), "frame requires --lambda");
      need(!config.lambda_range.has_value() && !config.n_override.has_value(),
           "frame takes only --lambda");
      break;
    case Command::selfcheck:
      need(!config.lambda.has_value() && !config.lambda_range.has_value() &&
               !config.n_override.has_value(),
           "selfcheck takes no parameters");
      break;
  }
  if (config.lambda && !(*config.lambda > 0.0))
    throw std::invalid_argument("--lambda must be positive");
  if (config.lambda_range) {
    const auto& r = *config.lambda_range;
    if (!(r.min > 0.0) || !(r.max >= r.min) || r.steps < 1)
      throw std::invalid_argument("invalid --lambda-min/--lambda-max/--steps");
  }
  if (config.n_override && *config.n_override < 0)
    throw std::invalid_argument("--n must be non-negative");
  if (!(config.gap > 0.0)) throw std::invalid_argument("--gap must be positive");
}

std::string certificate_text(const WitnessCertificate& cert) {
  std::ostringstream out;
  out << "lambda            " << format_double(cert.lambda) << "\n"
      << "n                 " << cert.n << "\n"
      << "n0_paper          "
      << (cert.n0_paper ? format_double(*cert.n0_paper) : std::string("n/a")) << "\n"
      << "ratio_lower       " << format_double(cert.ratio_lower) << "\n"
      << "threshold         " << format_double(cert.threshold) << "\n"
      << "passed            " << csv_bool(cert.passed) << "\n"
      << "sup_norm          [" << format_double(cert.sup_norm.lower) << ", "
      << format_double(cert.sup_norm.upper) << "]\n"
      << "deriv_norm        [" << format_double(cert.deriv_norm.lower) << ", "
      << format_double(cert.deriv_norm.upper) << "]\n"
      << "tail_bound        " << format_double(cert.tail_bound) << "\n"
      << "p_infty_lower     " << format_double(cert.p_infty_lower) << "\n";
  if (cert.oscillation) {
    const auto& osc = *cert.oscillation;
    out << "oscillation.r     " << format_double(osc.r) << "\n"
        << "oscillation.plus  " << format_double(osc.plus_mass) << "\n"
        << "oscillation.minus " << format_double(osc.minus_mass) << "\n"
        << "oscillation.thr   " << format_double(osc.threshold) << "\n";
  }
  return out.str();
}

std::string certificate_csv(const WitnessCertificate& cert) {
  std::ostringstream out;
  out << "lambda,n,n0_paper,ratio_lower,threshold,passed,sup_lower,sup_upper,"
         "deriv_lower,deriv_upper,tail_bound,p_infty_lower\n";
  out << format_double(cert.lambda) << ',' << cert.n << ','
      << (cert.n0_paper ? format_double(*cert.n0_paper) : std::string()) << ','
      << format_double(cert.ratio_lower) << ',' << format_double(cert.threshold) << ','
      << csv_bool(cert.passed) << ',' << format_double(cert.sup_norm.lower) << ','
      << format_double(cert.sup_norm.upper) << ',' << format_double(cert.deriv_norm.lower)
      << ',' << format_double(cert.deriv_norm.upper) << ','
      << format_double(cert.tail_bound) << ',' << format_double(cert.p_infty_lower) << "\n";
  return out.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "lambda,n,ratio_lower,threshold,product,passed\n";
  for (const auto& row : rows) {
    out << format_double(row.lambda) << ',' << row.n << ',' << format_double(row.ratio_lower)
        << ',' << format_double(row.threshold) << ',' << format_double(row.product) << ','
        << csv_bool(row.passed) << "\n";
  }
  return out.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    json j;
    j["lambda"] = row.lambda;
    j["n"] = row.n;
    j["ratio_lower"] = std::isfinite(row.ratio_lower) ? json(row.ratio_lower) : json(nullptr);
    j["threshold"] = std::isfinite(row.threshold) ? json(row.threshold) : json(nullptr);
    j["product"] = std::isfinite(row.product) ? json(row.product) : json(nullptr);
    j["passed"] = row.passed;
    if (!row.note.empty()) j["note"] = row.note;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string sweep_text(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "lambda        n     ratio_lower        threshold          product        passed\n";
  for (const auto& row : rows) {
    out << format_double(row.lambda) << "  " << row.n << "  " << format_double(row.ratio_lower)
        << "  " << format_double(row.threshold) << "  " << format_double(row.product) << "  "
        << csv_bool(row.passed);
    if (!row.note.empty()) out << "  # " << row.note;
    out << "\n";
  }
  return out.str();
}

std::string coeffs_csv(const CoefficientTable& table) {
  std::ostringstream out;
  out << "k,a_k\n";
  for (int k = 0; k <= table.max_index(); ++k)
    out << k << ',' << format_double(table[k]) << "\n";
  return out.str();
}

std::string coeffs_json(const CoefficientTable& table) {
  json arr = json::array();
  for (int k = 0; k <= table.max_index(); ++k) {
    json j;
    j["k"] = k;
    j["a_k"] = table[k];
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string oscillation_text(const OscillationReport& rep) {
  std::ostringstream out;
  out << "r           " << format_double(rep.r) << "\n"
      << "plus_mass   " << format_double(rep.plus_mass) << "\n"
      << "minus_mass  " << format_double(rep.minus_mass) << "\n"
      << "quad_error  " << format_double(rep.quad_error) << "\n"
      << "threshold   " << format_double(rep.threshold) << "\n"
      << "passed      " << csv_bool(rep.passed()) << "\n";
  return out.str();
}

std::string oscillation_csv(const OscillationReport& rep) {
  std::ostringstream out;
  out << "r,plus_mass,minus_mass,quad_error,threshold,passed\n"
      << format_double(rep.r) << ',' << format_double(rep.plus_mass) << ','
      << format_double(rep.minus_mass) << ',' << format_double(rep.quad_error) << ','
      << format_double(rep.threshold) << ',' << csv_bool(rep.passed()) << "\n";
  return out.str();
}

std::string frame_text(const FrameBounds& fb) {
  std::ostringstream out;
  out << "lambda        " << format_double(fb.lambda) << "\n"
      << "mu            " << format_double(fb.mu) << "\n"
      << "big_m         " << format_double(fb.big_m) << "\n"
      << "omega_grid    " << fb.omega_grid << "\n"
      << "l_truncation  " << fb.l_truncation << "\n";
  return out.str();
}

std::string frame_csv(const FrameBounds& fb) {
  std::ostringstream out;
  out << "lambda,mu,big_m,omega_grid,l_truncation\n"
      << format_double(fb.lambda) << ',' << format_double(fb.mu) << ','
      << format_double(fb.big_m) << ',' << fb.omega_grid << ',' << fb.l_truncation << "\n";
  return out.str();
}

std::string selfcheck_text(const SelfCheckReport& report) {
  std::ostringstream out;
  out << "status: " << (report.oracles_converged ? "oracles converged" : "oracle failure") << "\n";
  for (const auto& row : report.rows) {
    out << (row.agree ? "agree    " : "DISAGREE ") << row.name << "\n"
        << "         reference  " << format_double(row.reference) << "\n"
        << "         recomputed " << format_double(row.recomputed) << "\n";
    if (!row.note.empty()) out << "         note: " << row.note << "\n";
  }
  return out.str();
}

std::string selfcheck_csv(const SelfCheckReport& report) {
  std::ostringstream out;
  out << "name,reference,recomputed,difference,agree\n";
  for (const auto& row : report.rows) {
    out << '"' << row.name << "\"," << format_double(row.reference) << ','
        << format_double(row.recomputed) << ',' << format_double(row.difference) << ','
        << csv_bool(row.agree) << "\n";
  }
  return out.str();
}

std::string selfcheck_json(const SelfCheckReport& report) {
  json arr = json::array();
  for (const auto& row : report.rows) {
    json j;
    j["name"] = row.name;
    j["reference"] = row.reference;
    j["recomputed"] = row.recomputed;
    j["difference"] = row.difference;
    j["agree"] = row.agree;
    if (!row.note.empty()) j["note"] = row.note;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

int emit(const RunConfig& config, const std::string& payload) {
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      std::cerr << "error: cannot open output file " << *config.output_path << "\n";
      return kExitIo;
    }
    file << payload;
    if (!file.good()) {
      std::cerr << "error: write failed for " << *config.output_path << "\n";
      return kExitIo;
    }
    return kExitOk;
  }
  std::cout << payload;
  return kExitOk;
}

int run_certify(const RunConfig& config) {
  CertifyOptions opts;
  opts.rel_gap = config.gap;
  opts.with_oscillation = config.with_oscillation;
  if (config.n_override) opts.order_override = *config.n_override;
  const WitnessCertificate cert = certify(*config.lambda, opts);

  std::string payload;
  switch (config.format) {
    case OutputFormat::json: payload = to_json(cert); break;
    case OutputFormat::csv: payload = certificate_csv(cert); break;
    case OutputFormat::text: payload = certificate_text(cert); break;
  }
  const int io = emit(config, payload);
  if (io != kExitOk) return io;
  return cert.passed ? kExitOk : kExitFailedCertification;
}

int run_sweep(const RunConfig& config) {
  const auto& range = *config.lambda_range;
  std::vector<double> lambdas;
  lambdas.reserve(static_cast<std::size_t>(range.steps));
  for (int i = 0; i < range.steps; ++i) {
    const double t = (range.steps == 1)
                         ? 0.0
                         : static_cast<double>(i) / static_cast<double>(range.steps - 1);
    lambdas.push_back(range.min + t * (range.max - range.min));
  }
  const auto rows = sharpness_sweep(lambdas, config.gap);

  std::string payload;
  switch (config.format) {
    case OutputFormat::json: payload = sweep_json(rows); break;
    case OutputFormat::csv: payload = sweep_csv(rows); break;
    case OutputFormat::text: payload = sweep_text(rows); break;
  }
  const int io = emit(config, payload);
  if (io != kExitOk) return io;
  for (const auto& row : rows)
    if (!row.passed) return kExitFailedCertification;
  return kExitOk;
}

int run_coeffs(const RunConfig& config) {
  const CoefficientTable table(*config.n_override);
  std::string payload;
  switch (config.format) {
    case OutputFormat::json: payload = coeffs_json(table); break;
    case OutputFormat::csv:
    case OutputFormat::text: payload = coeffs_csv(table); break;
  }
  return emit(config, payload);
}

int run_oscillation(const RunConfig& config) {
  const int order = config.n_override ? *config.n_override
                                      : choose_order(*config.lambda, config.gap);
  const TranslateNetwork net = canonical_witness({*config.lambda, order});
  const double scale = coarse_sup_estimate(net);
  const OscillationReport rep = oscillation_certificate(net, 1.01, 1e-8 * std::max(scale, 1e-12));

  std::string payload;
  switch (config.format) {
    case OutputFormat::json: payload = to_json(rep); break;
    case OutputFormat::csv: payload = oscillation_csv(rep); break;
    case OutputFormat::text: payload = oscillation_text(rep); break;
  }
  const int io = emit(config, payload);
  if (io != kExitOk) return io;
  return rep.passed() ? kExitOk : kExitFailedCertification;
}

int run_frame(const RunConfig& config) {
  const FrameBounds fb = frame_bounds(*config.lambda, 4096);
  std::string payload;
  switch (config.format) {
    case OutputFormat::json: payload = to_json(fb); break;
    case OutputFormat::csv: payload = frame_csv(fb); break;
    case OutputFormat::text: payload = frame_text(fb); break;
  }
  return emit(config, payload);
}

int run_selfcheck_command(const RunConfig& config) {
  const SelfCheckReport report = ::turancert::run_selfcheck();
  std::string payload;
  switch (config.format) {
    case OutputFormat::json: payload = selfcheck_json(report); break;
    case OutputFormat::csv: payload = selfcheck_csv(report); break;
    case OutputFormat::text: payload = selfcheck_text(report); break;
  }
  const int io = emit(config, payload);
  if (io != kExitOk) return io;
  if (!report.oracles_converged) {
    std::cerr << "error: self-check oracle did not converge\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config) {
  try {
    validate(config);
    switch (config.command) {
      case Command::certify: return run_certify(config);
      case Command::sweep: return run_sweep(config);
      case Command::coeffs: return run_coeffs(config);
      case Command::oscillation: return run_oscillation(config);
      case Command::frame: return run_frame(config);
      case Command::selfcheck: return run_selfcheck_command(config);
    }
    return kExitUsage;
  } catch (const infeasible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace turancert::cli
