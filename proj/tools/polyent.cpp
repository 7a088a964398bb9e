// polyent: polynomial entropy estimation on symmetric products and their
// suspensions. Subcommands: estimate, coding, verify, report.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyent/csv.hpp"
#include "polyent/errors.hpp"
#include "polyent/experiment.hpp"
#include "polyent/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitResourceCap = 3;

struct FlagValues {
  std::string config_path;
  std::string system, mode, eps, out, cloud;
  int nfold = -1, m = -1, nmax = -1, jobs = -1, count = -1;
  double mesh = -1.0, window = -1.0;
};

void attach_flags(CLI::App* cmd, FlagValues& v) {
  cmd->add_option("config", v.config_path, "optional key=value config file");
  cmd->add_option("--system", v.system, "map spec, e.g. square, northsouth:0.5, rotation:1/3");
  cmd->add_option("--mode", v.mode, "base|power|product|fn|susp|distinct-tuples|coding");
  cmd->add_option("--nfold", v.nfold, "order n (fn/susp/distinct-tuples) or iterate k (power)");
  cmd->add_option("--m", v.m, "collapsed cardinality m for susp mode");
  cmd->add_option("--mesh", v.mesh, "backbone grid mesh");
  cmd->add_option("--eps", v.eps, "comma list of decreasing epsilons");
  cmd->add_option("--nmax", v.nmax, "largest orbit depth");
  cmd->add_option("--window", v.window, "top fraction of the census used by the slope fit");
  cmd->add_option("--out", v.out, "CSV output path");
  cmd->add_option("--jobs", v.jobs, "worker threads for (eps,n) records");
  cmd->add_option("--count", v.count, "budgeted base cloud size");
  cmd->add_option("--cloud", v.cloud, "saturated|uniform base cloud");
}

polyent::ExperimentConfig merge_config(const FlagValues& v) {
  polyent::ExperimentConfig cfg;
  if (!v.config_path.empty()) cfg = polyent::parse_config_file(v.config_path);
  if (!v.system.empty()) cfg.system = v.system;
  if (!v.mode.empty()) cfg.mode = polyent::parse_mode(v.mode);
  if (v.nfold >= 0) cfg.nfold = v.nfold;
  if (v.m >= 0) cfg.m = v.m;
  if (v.mesh > 0) cfg.mesh = v.mesh;
  if (!v.eps.empty()) cfg.eps_list = polyent::parse_real_list(v.eps, "eps");
  if (v.nmax > 0) cfg.nmax = v.nmax;
  if (v.window > 0) cfg.window = v.window;
  if (!v.out.empty()) cfg.out = v.out;
  if (v.jobs > 0) cfg.jobs = v.jobs;
  if (v.count >= 0) cfg.count = v.count;
  if (!v.cloud.empty()) cfg.cloud = v.cloud;
  return cfg;
}

int run_estimate(const FlagValues& v, bool coding) {
  polyent::ExperimentConfig cfg = merge_config(v);
  if (coding) cfg.mode = polyent::Mode::Coding;
  const auto res = polyent::run_experiment(cfg);
  std::cout << res.cloud_description << "\n";
  std::cout << polyent::format_table(res.rows);
  std::printf("headline slope: %.6g\n", res.headline);
  if (!cfg.out.empty()) std::cout << "wrote " << cfg.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial entropy on symmetric products and suspensions"};
  app.require_subcommand(1);

  FlagValues est_flags, cod_flags;
  auto* est = app.add_subcommand("estimate", "run one experiment");
  attach_flags(est, est_flags);
  auto* cod = app.add_subcommand("coding", "run a word-census experiment");
  attach_flags(cod, cod_flags);

  std::string suite = "all";
  int verify_jobs = 2;
  auto* ver = app.add_subcommand("verify", "run a named check suite");
  ver->add_option("suite", suite, "metrics|dynamics|theorem|coding|all");
  ver->add_option("--jobs", verify_jobs, "worker threads");

  std::string report_path;
  auto* rep = app.add_subcommand("report", "pretty-print an emitted CSV");
  rep->add_option("csv", report_path, "CSV file produced by estimate")
      ->required();

  try {
    app.parse(argc, argv);
    if (est->parsed()) return run_estimate(est_flags, false);
    if (cod->parsed()) return run_estimate(cod_flags, true);
    if (ver->parsed()) {
      polyent::ExperimentConfig defaults;
      const auto results = polyent::run_suite(
          suite, verify_jobs, polyent::effective_cap(defaults));
      std::cout << polyent::format_results(results);
      return polyent::all_passed(results) ? kExitOk : kExitCheckFailure;
    }
    if (rep->parsed()) {
      std::cout << polyent::format_table(polyent::read_csv_file(report_path));
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  } catch (const polyent::resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const polyent::input_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitConfigError;
}
