#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "ifd/dimension.hpp"
#include "ifd/error.hpp"
#include "ifd/experiments.hpp"
#include "ifd/io.hpp"
#include "ifd/oracle.hpp"
#include "ifd/profile.hpp"

namespace ifd::cli {
namespace {

constexpr double kOracleTolerance = 1e-9;

struct ComputeArgs {
  std::string input;
  std::string format = "json";
  int decimals = 4;
  std::string base = "2";
  bool oracle = false;
};

struct SweepArgs {
  std::string family;
  int n_min = 1;
  int n_max = 1;
  std::string format = "csv";
  int decimals = 4;
  std::string base = "2";
  bool oracle = false;
  std::vector<std::string> detect_limit;
  std::string plot_data;
  unsigned threads = 1;
};

// Names the axiom a validation failure violates.
std::string describe(const Error& e) {
  switch (e.code()) {
    case ErrorCode::EmptySubset:
      return std::string(e.what()) + " (axiom violated: the empty set carries no mass)";
    case ErrorCode::NonUnitTotal:
      return std::string(e.what()) + " (axiom violated: total mass equals 1)";
    case ErrorCode::NegativeMass:
    case ErrorCode::NonFiniteMass:
      return std::string(e.what()) + " (masses must lie in [0, 1])";
    default:
      return e.what();
  }
}

std::string render_report(const DimensionReport& r, TableFormat format, int decimals) {
  switch (format) {
    case TableFormat::Json:
      return io::report_to_json(r) + "\n";
    case TableFormat::Csv:
      return "entropy_bits,split_scale_bits,dimension,degenerate\n" +
             format_fixed(r.entropy, decimals) + "," + format_fixed(r.split_scale, decimals) + "," +
             format_fixed(r.dimension, decimals) + "," + (r.degenerate ? "true" : "false") + "\n";
    case TableFormat::Markdown:
      return "| H_D | split scale | D_m | degenerate |\n|---:|---:|---:|:---:|\n| " +
             format_fixed(r.entropy, decimals) + " | " + format_fixed(r.split_scale, decimals) +
             " | " + format_fixed(r.dimension, decimals) + " | " +
             (r.degenerate ? "yes" : "no") + " |\n";
  }
  return {};
}


int run_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  const MassFunction mass = io::read_mass_json(args.input);
  const LogBase base = LogBase::parse(args.base);
  const DimensionReport report = information_dimension(mass, base);
  if (args.oracle) {
    const DimensionReport bits = information_dimension(mass, LogBase::two());
    const DimensionReport reference = oracle::brute_force_report(mass);
    if (int status = oracle_verdict(bits, reference, args.input, err); status != kExitOk) {
      return status;
    }
  }
  out << render_report(report, parse_table_format(args.format), args.decimals);
  return kExitOk;
}

int run_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(args.family);
  SweepOptions options;
  options.threads = args.threads;
  options.base = LogBase::parse(args.base);
  const ConvergenceTable table = run_convergence(family, args.n_min, args.n_max, options);

  if (args.oracle) {
    for (const auto& row : table.rows) {
      if (row.n > kDefaultExpansionLimit) break;
      const auto profile = make_family(family, row.n);
      const DimensionReport main = information_dimension_profile(profile);
      const DimensionReport reference = oracle::brute_force_report(profile_to_mass(profile));
      const std::string context = args.family + " N=" + std::to_string(row.n);
      if (int status = oracle_verdict(main, reference, context, err); status != kExitOk) {
        return status;
      }
    }
  }

  const TableFormat format = parse_table_format(args.format);
  std::string rendered = render_table(table, format, args.decimals);
  if (!args.detect_limit.empty()) {
    double tol = 0.0;
    int window = 0;
    const std::string& t = args.detect_limit[0];
    const std::string& w = args.detect_limit[1];
    auto rt = std::from_chars(t.data(), t.data() + t.size(), tol);
    auto rw = std::from_chars(w.data(), w.data() + w.size(), window);
    if (rt.ec != std::errc() || rt.ptr != t.data() + t.size() || rw.ec != std::errc() ||
        rw.ptr != w.data() + w.size()) {
      throw Error(ErrorCode::InvalidArgument, "--detect-limit expects <tol> <window>");
    }
    const ConvergenceVerdict verdict = detect_limit(table, window, tol);
    if (format == TableFormat::Json) {
      rendered += render_verdict_json(verdict);
    } else {
      rendered += render_verdict(verdict, args.decimals);
    }
  }
  if (!args.plot_data.empty()) {
    std::ofstream plot(args.plot_data, std::ios::binary);
    if (!plot) throw Error(ErrorCode::InvalidArgument, "cannot write " + args.plot_data);
    plot << render_plot_data(table, args.decimals);
  }
  out << rendered;
  return kExitOk;
}

}  // namespace

int oracle_verdict(const DimensionReport& main, const DimensionReport& reference,
                   std::string_view context, std::ostream& err) {
  if (oracle::compare_reports(main, reference, kOracleTolerance)) return kExitOk;
  err << "oracle mismatch (" << context << "): main " << io::report_to_json(main)
      << " vs brute force " << io::report_to_json(reference) << "\n";
  return kExitOracleMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information fractal dimension of mass functions", "ifdim"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate a mass function from a JSON file");
  compute_cmd->add_option("file", compute.input, "Mass-function JSON document")->required();
  compute_cmd->add_option("--format", compute.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  compute_cmd->add_option("--decimals", compute.decimals, "Decimals for csv/markdown")
      ->check(CLI::Range(1, 15));
  compute_cmd->add_option("--base", compute.base, "Logarithm base for entropy and split scale")
      ->check(CLI::IsMember({"2", "e", "10"}));
  compute_cmd->add_flag("--oracle", compute.oracle, "Cross-check against brute-force evaluation");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a mass-function family over a range of N");
  sweep_cmd->add_option("family", sweep.family,
                        "vacuous | uniform-bayesian | uniform-powerset | max-deng")
      ->required();
  sweep_cmd->add_option("n_min", sweep.n_min, "Smallest frame size")->required();
  sweep_cmd->add_option("n_max", sweep.n_max, "Largest frame size")->required();
  sweep_cmd->add_option("--format", sweep.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  sweep_cmd->add_option("--decimals", sweep.decimals, "Decimals for csv/markdown")
      ->check(CLI::Range(1, 15));
  sweep_cmd->add_option("--base", sweep.base, "Logarithm base for entropy and split scale")
      ->check(CLI::IsMember({"2", "e", "10"}));
  sweep_cmd->add_flag("--oracle", sweep.oracle, "Cross-check rows with N <= 20 by enumeration");
  sweep_cmd->add_option("--detect-limit", sweep.detect_limit, "Append a convergence verdict")
      ->expected(2)
      ->type_name("<tol> <window>");
  sweep_cmd->add_option("--plot-data", sweep.plot_data, "Write N,split_scale,entropy columns");
  sweep_cmd->add_option("--threads", sweep.threads, "Row-evaluation threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (compute_cmd->parsed()) return run_compute(compute, out, err);
    return run_sweep(sweep, out, err);
  } catch (const Error& e) {
    err << "error: " << describe(e) << "\n";
    return kExitInputError;
  }
}

}  // namespace ifd::cli
