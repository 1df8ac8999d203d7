// doerfler: run bulk-marking strategies on indicator files and benchmark them.
//
//   doerfler mark  --input eta.txt --algorithm quickmark --theta 0.5 --output marked.txt
//   doerfler bench --algorithm sort,xstar --n 1000,10000 --runs 30 --format csv
//
// Exit status: 0 success, 2 parse or parameter error, 3 resource error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "doerfler/bench.hpp"
#include "doerfler/error.hpp"
#include "doerfler/indicator_io.hpp"
#include "doerfler/kernels.hpp"
#include "doerfler/marking.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct MarkArgs {
  std::string input;
  std::string output;
  std::string algorithm = "quickmark";
  double theta = 0.5;
  double nu = 0.5;
  std::string pivot = "median";
  std::uint64_t pivot_seed = 0;
  double quantile = 0.3;
};

struct BenchArgs {
  std::vector<std::string> algorithms{"sort", "xstar"};
  std::vector<double> thetas;
  std::vector<std::size_t> ns;
  std::size_t runs = 30;
  std::uint64_t seed = 1;
  double nu = 0.5;
  std::size_t max_n = 10'000'000;
  std::string output;
  std::string format = "csv";
  bool instrument = false;
  bool per_element = false;
  bool quiet = false;
};

doerfler::PivotStrategy parse_pivot(const MarkArgs& args) {
  if (args.pivot == "median") return doerfler::MedianPivot{};
  if (args.pivot == "random") return doerfler::RandomPivot{args.pivot_seed};
  if (args.pivot == "quantile") return doerfler::quantile_pivot(args.quantile);
  throw doerfler::Error(doerfler::ErrorKind::kInvalidArgument, "unknown pivot '" + args.pivot + "'");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_mark(const MarkArgs& args) {
  const doerfler::IndicatorVector x = doerfler::read_indicator_file(args.input);
  doerfler::MarkOptions options;
  options.pivot = parse_pivot(args);
  const doerfler::Algorithm algorithm = doerfler::parse_algorithm(args.algorithm);
  const doerfler::MarkReport report =
      doerfler::mark(x, algorithm, doerfler::MarkingParams{args.theta, args.nu}, options);

  std::cout << "algorithm: " << doerfler::to_string(algorithm) << '\n'
            << "N: " << x.size() << '\n'
            << "theta: " << format_double(args.theta) << '\n'
            << "goal: " << format_double(report.goal) << '\n'
            << "cardinality: " << report.outcome.cardinality() << '\n'
            << "achieved_sum: " << format_double(report.outcome.achieved_sum) << '\n';
  if (report.x_star) std::cout << "x_star: " << format_double(*report.x_star) << '\n';
  if (!args.output.empty()) {
    doerfler::write_marked_indices(args.output, report.outcome.marked);
    std::cout << "marked_indices: " << args.output << '\n';
  } else {
    std::cout << "marked:";
    for (std::size_t j : report.outcome.marked) std::cout << ' ' << j;
    std::cout << '\n';
  }
  return 0;
}

int run_bench_command(const BenchArgs& args) {
  doerfler::BenchConfig config;
  config.algorithms.clear();
  for (const auto& name : args.algorithms) config.algorithms.push_back(doerfler::parse_algorithm(name));
  if (!args.thetas.empty()) config.theta_grid = args.thetas;
  if (!args.ns.empty()) config.n_grid = args.ns;
  config.runs = args.runs;
  config.seed = args.seed;
  config.nu = args.nu;
  config.max_n = args.max_n;
  config.instrument = args.instrument;

  doerfler::TableFormat format;
  if (args.format == "csv") {
    format = doerfler::TableFormat::kCsv;
  } else if (args.format == "table") {
    format = doerfler::TableFormat::kTable;
  } else {
    throw doerfler::Error(doerfler::ErrorKind::kInvalidArgument, "unknown format '" + args.format + "'");
  }
  doerfler::validate(config);

  if (!args.quiet) {
    std::cerr << "kernels: " << doerfler::kernels::to_string(doerfler::kernels::active().isa) << '\n';
  }
  const auto records = doerfler::run_bench(config, args.quiet ? nullptr : &std::cerr);
  const std::string text = doerfler::emit_table(records, format, args.per_element);
  if (args.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) {
      throw doerfler::Error(doerfler::ErrorKind::kResourceError, "cannot create '" + args.output + "'");
    }
    out << text;
  }
  return 0;
}

int exit_code_for(doerfler::ErrorKind kind) {
  return kind == doerfler::ErrorKind::kResourceError ? kExitResource : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bulk (Doerfler) marking strategies and benchmark harness"};
  app.require_subcommand(1);

  MarkArgs mark_args;
  auto* mark = app.add_subcommand("mark", "mark an indicator file (.txt text or .f64 binary)");
  mark->add_option("--input", mark_args.input, "indicator file")->required();
  mark->add_option("--output", mark_args.output, "write 0-based marked indices here");
  mark->add_option("--algorithm", mark_args.algorithm, "sort|decrement|binning|quickmark|xstar")
      ->capture_default_str();
  mark->add_option("--theta", mark_args.theta, "bulk parameter in (0, 1]")->capture_default_str();
  mark->add_option("--nu", mark_args.nu, "reduction factor in (0, 1) for decrement/binning")
      ->capture_default_str();
  mark->add_option("--pivot", mark_args.pivot, "median|random|quantile (quickmark)")
      ->capture_default_str();
  mark->add_option("--pivot-seed", mark_args.pivot_seed, "seed for the random pivot");
  mark->add_option("--quantile", mark_args.quantile, "q for the quantile pivot")->capture_default_str();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time the strategies on seeded uniform instances");
  bench->add_option("--algorithm", bench_args.algorithms, "comma-separated list")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--theta", bench_args.thetas, "comma-separated theta grid")->delimiter(',');
  bench->add_option("--n", bench_args.ns, "comma-separated sizes")->delimiter(',');
  bench->add_option("--runs", bench_args.runs, "runs per cell")->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "instance seed")->capture_default_str();
  bench->add_option("--nu", bench_args.nu, "reduction factor for decrement/binning")
      ->capture_default_str();
  bench->add_option("--max-n", bench_args.max_n, "largest admissible N")->capture_default_str();
  bench->add_option("--output", bench_args.output, "write the table here instead of stdout");
  bench->add_option("--format", bench_args.format, "csv|table")->capture_default_str();
  bench->add_flag("--instrument", bench_args.instrument, "count comparisons in an extra pass");
  bench->add_flag("--per-element", bench_args.per_element, "report T(N)/N in ns");
  bench->add_flag("--quiet", bench_args.quiet, "no progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*mark) return run_mark(mark_args);
    return run_bench_command(bench_args);
  } catch (const doerfler::Error& e) {
    std::cerr << "error (" << doerfler::to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "error (resource-error): out of memory\n";
    return kExitResource;
  }
}
