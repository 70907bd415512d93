// qzeta: exact-arithmetic sweeps and verification suites for the
// simultaneous rational approximants to zeta_q(1) and zeta_q(2), q = 1/p.
//
// Subcommands:
//   sweep      one row per n: beta_n, alpha_n, b_n, a_n, residual enclosures,
//              decay exponents; csv/json/text output
//   verify     runs a verification suite and writes a JSON report;
//              exit code 0 iff no claim FAILed
//   constants  enclosures of the decay/measure constants

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qzeta/suites.hpp"

namespace {

constexpr int kUsageError = 2;

std::vector<long> parse_p_list(const std::string& text) {
  std::vector<long> ps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size() || v < 2)
      throw CLI::ValidationError("--p", "p values must be integers >= 2");
    ps.push_back(v);
  }
  if (ps.empty()) throw CLI::ValidationError("--p", "empty p list");
  return ps;
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw std::runtime_error("cannot open output file: " + out_file);
  out << text;
}

std::string constants_text() {
  using namespace qzeta;
  const RationalInterval& pi2 = pi_squared();
  RationalInterval three_over_pi2 =
      divide_positive(RationalInterval(BigRational(3)), pi2);
  RationalInterval decay1 = divide_positive(
      (pi2 - BigRational(4)).scaled(BigRational(3)), pi2);
  RationalInterval decay2 = divide_positive(
      (pi2 - BigRational(8)).scaled(BigRational(3)), pi2);
  auto [measure1, measure2] = irrationality_measure_constants();

  std::ostringstream out;
  out << "3/pi^2             = " << to_string(three_over_pi2) << "\n"
      << "3(pi^2-4)/pi^2     = " << to_string(decay1) << "\n"
      << "3(pi^2-8)/pi^2     = " << to_string(decay2) << "\n"
      << "3pi^2/(pi^2-4)     = " << to_string(measure1) << "\n"
      << "3pi^2/(pi^2-8)     = " << to_string(measure2) << "\n";
  return out.str();
}

std::string constants_json() {
  using namespace qzeta;
  const RationalInterval& pi2 = pi_squared();
  auto [measure1, measure2] = irrationality_measure_constants();
  auto entry = [](const RationalInterval& iv) {
    return nlohmann::json{{"lo", to_decimal_string(iv.lo, 20, Rounding::Down)},
                          {"hi", to_decimal_string(iv.hi, 20, Rounding::Up)}};
  };
  nlohmann::json j;
  j["three_over_pi_sq"] = entry(divide_positive(RationalInterval(BigRational(3)), pi2));
  j["decay_zeta1"] = entry(divide_positive((pi2 - BigRational(4)).scaled(BigRational(3)), pi2));
  j["decay_zeta2"] = entry(divide_positive((pi2 - BigRational(8)).scaled(BigRational(3)), pi2));
  j["measure_zeta1"] = entry(measure1);
  j["measure_zeta2"] = entry(measure2);
  return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational approximant sweeps and verification for zeta_q(1), zeta_q(2)"};
  app.require_subcommand(1);

  std::string p_arg = "2";
  int n_max = 8;
  long depth = 0;
  long abc_bound = 3;
  std::string format = "text";
  std::string out_file;
  std::string suite;

  auto add_common = [&](CLI::App* cmd, bool with_abc) {
    cmd->add_option("--p", p_arg, "comma-separated list of p values (each >= 2)");
    cmd->add_option("--n-max", n_max, "largest n in the sweep/suite")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--depth", depth,
                    "series truncation depth (0 = automatic, grows like n^2)");
    if (with_abc)
      cmd->add_option("--abc-bound", abc_bound, "bound on |a|,|b|,|c| in the grid")
          ->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd->add_option("--out", out_file, "write output to this file instead of stdout");
  };

  CLI::App* sweep = app.add_subcommand("sweep", "per-n approximants and residuals");
  add_common(sweep, false);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "orthogonality|representations|bounds|extralemma|congruence|all")
      ->required()
      ->check(CLI::IsMember({"orthogonality", "representations", "bounds", "extralemma",
                             "congruence", "all"}));
  add_common(verify, true);

  CLI::App* constants = app.add_subcommand("constants", "decay and measure constants");
  constants->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  constants->add_option("--out", out_file, "write output to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kUsageError;
  }

  try {
    if (sweep->parsed()) {
      std::vector<long> ps;
      try {
        ps = parse_p_list(p_arg);
      } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
      }
      std::vector<qzeta::SweepRow> rows;
      for (long p : ps) {
        auto part = qzeta::run_sweep(p, n_max, depth);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      if (format == "csv")
        write_output(qzeta::sweep_csv(rows), out_file);
      else if (format == "json")
        write_output(qzeta::sweep_json(rows), out_file);
      else
        write_output(qzeta::sweep_text(rows), out_file);
      return 0;
    }

    if (verify->parsed()) {
      qzeta::RunConfig config;
      try {
        config.ps = parse_p_list(p_arg);
      } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
      }
      config.n_max = n_max;
      config.abc_bound = abc_bound;
      config.depth = depth;
      config.suite = suite;
      qzeta::VerificationReport report = qzeta::run_verify(config);
      write_output(report.to_json(), out_file);
      std::cerr << "claims: " << report.claims.size()
                << " pass: " << report.count(qzeta::ClaimStatus::Pass)
                << " fail: " << report.fail_count()
                << " not_attempted: " << report.count(qzeta::ClaimStatus::NotAttempted)
                << "\n";
      return report.ok() ? 0 : 1;
    }

    if (constants->parsed()) {
      write_output(format == "json" ? constants_json() : constants_text(), out_file);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
