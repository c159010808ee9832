#include <string>

#include <CLI11.hpp>

#include "turancert/cli.hpp"

namespace {

using turancert::cli::Command;
using turancert::cli::OutputFormat;
using turancert::cli::RunConfig;

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return OutputFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified inverse Markov-Bernstein inequalities for Gaussian translate networks"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  double lambda = 0.0;
  double lambda_min = 0.0, lambda_max = 0.0;
  int steps = 0;
  int n_value = -1;
  double gap = 1e-6;
  bool with_oscillation = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", out_path, "Write the result to PATH instead of stdout");
    cmd->add_option("--gap", gap, "Certification gap, relative to the witness magnitude");
  };

  CLI::App* certify = app.add_subcommand("certify", "Certify the derivative/function norm ratio");
  certify->add_option("--lambda", lambda, "Node spacing")->required();
  certify->add_option("--n", n_value, "Truncation order override");
  certify->add_flag("--with-oscillation", with_oscillation, "Attach the oscillation report");
  add_common(certify);

  CLI::App* sweep = app.add_subcommand("sweep", "Certify a range of spacings");
  sweep->add_option("--lambda-min", lambda_min, "Smallest spacing")->required();
  sweep->add_option("--lambda-max", lambda_max, "Largest spacing")->required();
  sweep->add_option("--steps", steps, "Number of spacings")->required();
  add_common(sweep);

  CLI::App* coeffs = app.add_subcommand("coeffs", "Emit the coefficient table a_0..a_n");
  coeffs->add_option("--n", n_value, "Largest index")->required();
  add_common(coeffs);

  CLI::App* oscillation =
      app.add_subcommand("oscillation", "Signed transform masses for the witness");
  oscillation->add_option("--lambda", lambda, "Node spacing")->required();
  oscillation->add_option("--n", n_value, "Truncation order override");
  add_common(oscillation);

  CLI::App* frame = app.add_subcommand("frame", "Frame-type L2 bounds for translate sums");
  frame->add_option("--lambda", lambda, "Node spacing")->required();
  add_common(frame);

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Audit constants against oracles");
  add_common(selfcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return turancert::cli::kExitUsage;
  }

  RunConfig config;
  config.format = parse_format(format);
  config.gap = gap;
  config.with_oscillation = with_oscillation;
  if (!out_path.empty()) config.output_path = out_path;

  if (certify->parsed()) {
    config.command = Command::certify;
    config.lambda = lambda;
    if (certify->count("--n") > 0) config.n_override = n_value;
  } else if (sweep->parsed()) {
    config.command = Command::sweep;
    config.lambda_range = turancert::cli::LambdaRange{lambda_min, lambda_max, steps};
  } else if (coeffs->parsed()) {
    config.command = Command::coeffs;
    config.n_override = n_value;
  } else if (oscillation->parsed()) {
    config.command = Command::oscillation;
    config.lambda = lambda;
    if (oscillation->count("--n") > 0) config.n_override = n_value;
  } else if (frame->parsed()) {
    config.command = Command::frame;
    config.lambda = lambda;
  } else if (selfcheck->parsed()) {
    config.command = Command::selfcheck;
  }

  return turancert::cli::run(config);
}
