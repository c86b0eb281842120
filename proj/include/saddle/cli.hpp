#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "saddle/bench.hpp"

namespace saddle::bench {

namespace detail {

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace detail

/// `bench <matgame|lasso> --example <1-4> --algos <csv> [--iters N] [--seed S]
///  [--desk] [--target T] [--out PATH] [--format csv|json] [--config FILE]`
///
/// Exit codes: 0 ok, 2 config error, 3 solver error (partial output written).
inline int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Benchmark harness for bilinear saddle-point solvers"};
  app.require_subcommand(1);

  struct Flags {
    std::string algos;
    std::optional<long> iters;
    std::optional<std::uint64_t> seed;
    std::optional<int> example;
    bool desk = false;
    std::optional<double> target;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::string> config_file;
    std::optional<long> record_every;
    std::optional<std::string> reference;
    std::optional<std::size_t> m, n, s;
  } flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--example", flags.example, "instance index 1..4");
    sub->add_option("--algos", flags.algos,
                    "comma-separated list from pda,grpda,npda,anpda,npdal");
    sub->add_option("--iters", flags.iters, "iteration budget per run");
    sub->add_option("--seed", flags.seed, "generator seed");
    sub->add_flag("--desk", flags.desk, "shrink large instances to desk scale");
    sub->add_option("--target", flags.target, "stop a run once the metric reaches this value");
    sub->add_option("--out", flags.out, "output path ('-' for stdout)");
    sub->add_option("--format", flags.format, "csv or json (default: from file extension)");
    sub->add_option("--config", flags.config_file, "JSON config file; flags override it");
    sub->add_option("--record-every", flags.record_every, "record the metric every N iterations");
    sub->add_option("--reference", flags.reference,
                    "reference value mode: none, long_run, oracle_ista");
    sub->add_option("-m", flags.m, "override row count");
    sub->add_option("-n", flags.n, "override column count");
    sub->add_option("-s", flags.s, "override LASSO support size");
  };
  CLI::App* matgame = app.add_subcommand("matgame", "min-max matrix game instances");
  CLI::App* lasso = app.add_subcommand("lasso", "l1-regularized least squares instances");
  add_common(matgame);
  add_common(lasso);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, any parse failure is a config error
  }

  try {
    BenchConfig cfg;
    if (flags.config_file) {
      std::ifstream in(*flags.config_file);
      if (!in) {
        std::cerr << "error: cannot read config file '" << *flags.config_file << "'\n";
        return 2;
      }
      nlohmann::json j;
      in >> j;
      cfg = config_from_json(j);
    }

    cfg.problem.kind = matgame->parsed() ? "matgame" : "lasso";
    if (flags.example) cfg.problem.example = *flags.example;
    if (flags.seed) cfg.problem.seed = *flags.seed;
    if (flags.desk) cfg.problem.desk = true;
    if (flags.m) cfg.problem.m = flags.m;
    if (flags.n) cfg.problem.n = flags.n;
    if (flags.s) cfg.problem.s = flags.s;
    if (flags.iters) cfg.max_iter = *flags.iters;
    if (flags.record_every) cfg.record_every = *flags.record_every;
    if (flags.target) cfg.target_metric = flags.target;
    if (flags.out) cfg.out_path = *flags.out;
    if (flags.format) {
      if (*flags.format == "csv") cfg.format = OutputFormat::csv;
      else if (*flags.format == "json") cfg.format = OutputFormat::json;
      else {
        std::cerr << "error: unknown format '" << *flags.format << "'\n";
        return 2;
      }
    }
    if (flags.reference) {
      const auto mode = reference_mode_from_name(*flags.reference);
      if (!mode) {
        std::cerr << "error: unknown reference mode '" << *flags.reference << "'\n";
        return 2;
      }
      cfg.reference = *mode;
    } else if (!flags.config_file && cfg.problem.kind == "lasso") {
      cfg.reference = ReferenceMode::long_run;  // so LASSO reports carry phi_star by default
    }

    if (!flags.algos.empty()) {
      cfg.runs.clear();
      for (const std::string& tok : detail::split_csv(flags.algos)) {
        const auto algo = algo_from_name(tok);
        if (!algo) {
          std::cerr << "error: unknown algorithm '" << tok << "' in --algos\n";
          return 2;
        }
        RunSpec r;
        r.label = tok;
        r.algo = *algo;
        cfg.runs.push_back(std::move(r));
      }
    }
    if (cfg.runs.empty()) {
      std::cerr << "error: no runs configured; pass --algos or a config file with runs\n";
      return 2;
    }

    BenchReport report = run_bench(cfg);
    emit_report(report, resolve_format(cfg), cfg.out_path);

    for (const auto& r : report.runs) {
      if (r.trace.terminated_by == StopReason::error) {
        std::cerr << "error: run '" << r.label << "' failed: " << r.trace.error_message << '\n';
        return 3;
      }
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace saddle::bench
