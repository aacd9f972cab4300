// railprice: command-line front end for the entire-train pricing engine.
//
//   railprice analyze --scenario <file> [--out <report.json>]
//   railprice quote --scenario <file> --shipment <id> --beta <x>
//   railprice adoption-curve --scenario <file> --beta-min <x> --beta-max <y>
//                            --steps <n> --out <file.csv>
//
// Exit status: 0 success, 1 parse/validation error, 2 I/O error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "railprice/railprice.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

int run_analyze(const std::string& scenario_path, const std::string& out_path) {
  const auto scenario = railprice::load_scenario(scenario_path);
  const auto reports = railprice::analyze(scenario);
  railprice::print_table(std::cout, reports);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw railprice::Error(railprice::ErrorCode::IoError, "cannot open " + out_path);
    out << railprice::report_to_json(reports).dump(2) << '\n';
    if (!out) throw railprice::Error(railprice::ErrorCode::IoError, "cannot write " + out_path);
  }
  return kExitOk;
}

int run_quote(const std::string& scenario_path, const std::string& shipment, double beta) {
  const auto scenario = railprice::load_scenario(scenario_path);
  const auto q = railprice::quote(scenario, shipment, beta);
  const auto& a = q.analysis;
  std::cout << std::fixed << std::setprecision(2);
  std::cout << "shipment      " << q.shipment_id << '\n'
            << "route         ";
  for (std::size_t i = 0; i < a.route.nodes.size(); ++i) {
    std::cout << (i ? "-" : "") << a.route.nodes[i];
  }
  std::cout << " (" << a.route.distance_km << " km, q = " << a.route.q() << ")\n"
            << "dE            " << a.cost.de_total << '\n'
            << "P             " << a.price << '\n'
            << "C_inventory   " << a.stock.c_inventory_total << '\n'
            << std::setprecision(6) << "beta          " << q.beta << '\n'
            << std::setprecision(2) << "dH            " << q.dh << '\n'
            << "dR            " << q.dr << '\n'
            << "case          " << railprice::to_string(q.case_label)
            << (q.infeasible_band ? " (infeasible band)" : "") << '\n';
  return kExitOk;
}

int run_adoption(const std::string& scenario_path, double lo, double hi, std::size_t steps,
                 const std::string& out_path) {
  const auto scenario = railprice::load_scenario(scenario_path);
  railprice::emit_adoption_csv(scenario, lo, hi, steps, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-frequency entire-train discount analysis"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, shipment;
  double beta = 0.0, beta_min = 0.0, beta_max = 1.0;
  std::size_t steps = 101;

  auto* analyze = app.add_subcommand("analyze", "Evaluate every shipment in a scenario");
  analyze->add_option("--scenario", scenario_path, "Scenario file")->required();
  analyze->add_option("--out", out_path, "Write the JSON report here");

  auto* quote = app.add_subcommand("quote", "Surpluses for one shipment at a given discount");
  quote->add_option("--scenario", scenario_path, "Scenario file")->required();
  quote->add_option("--shipment", shipment, "Shipment id")->required();
  quote->add_option("--beta", beta, "Discount fraction in [0, 1]")->required();

  auto* adoption = app.add_subcommand("adoption-curve", "Portfolio adoption over a discount grid");
  adoption->add_option("--scenario", scenario_path, "Scenario file")->required();
  adoption->add_option("--beta-min", beta_min, "Lowest discount")->required();
  adoption->add_option("--beta-max", beta_max, "Highest discount")->required();
  adoption->add_option("--steps", steps, "Grid points, endpoints included")->required();
  adoption->add_option("--out", out_path, "CSV output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze) return run_analyze(scenario_path, out_path);
    if (*quote) return run_quote(scenario_path, shipment, beta);
    if (*adoption) return run_adoption(scenario_path, beta_min, beta_max, steps, out_path);
  } catch (const railprice::Error& e) {
    std::cerr << "railprice: " << e.what() << '\n';
    return e.code() == railprice::ErrorCode::IoError ? kExitIo : kExitInvalid;
  }
  return kExitInvalid;
}
