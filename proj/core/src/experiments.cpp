#include "ifd/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <thread>

#include "json.hpp"

#include "ifd/dimension.hpp"
#include "ifd/error.hpp"

namespace ifd {
namespace {

ConvergenceRow evaluate_row(Family family, int n, LogBase base) {
  const DimensionReport r = information_dimension_profile(make_family(family, n), base);
  return ConvergenceRow{n, r.entropy, r.split_scale, r.dimension, r.degenerate};
}

void check_decimals(int decimals) {
  if (decimals < 1 || decimals > 15) {
    throw Error(ErrorCode::InvalidArgument,
                "decimals must be in [1, 15], got " + std::to_string(decimals));
  }
}

std::string_view entropy_symbol(Family family) {
  switch (family) {
    case Family::UniformBayesian: return "H_S";
    case Family::MaxDeng: return "H_maxD";
    default: return "H_D";
  }
}

nlohmann::ordered_json verdict_json(const ConvergenceVerdict& v) {
  nlohmann::ordered_json j;
  j["converged"] = v.converged;
  j["limit_estimate"] = v.limit_estimate;
  j["achieved_at_n"] = v.achieved_at_n ? nlohmann::ordered_json(*v.achieved_at_n) : nullptr;
  j["tolerance"] = v.tolerance;
  return j;
}

}  // namespace

ConvergenceTable run_convergence(Family family, int n_min, int n_max, const SweepOptions& options) {
  if (n_min < 1 || n_min > n_max) {
    throw Error(ErrorCode::InvalidRange, "need 1 <= n_min <= n_max, got [" +
                                             std::to_string(n_min) + ", " +
                                             std::to_string(n_max) + "]");
  }
  if (n_max > kDefaultProfileLimit) {
    throw Error(ErrorCode::FrameTooLarge, "n_max " + std::to_string(n_max) + " exceeds " +
                                              std::to_string(kDefaultProfileLimit));
  }
  const auto count = static_cast<std::size_t>(n_max - n_min + 1);
  ConvergenceTable table{family, std::vector<ConvergenceRow>(count)};

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      table.rows[i] = evaluate_row(family, n_min + static_cast<int>(i), options.base);
    }
    return table;
  }

  // Each row is written by exactly one worker; row evaluation itself is
  // sequential, so the result is independent of scheduling.
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          table.rows[i] = evaluate_row(family, n_min + static_cast<int>(i), options.base);
        }
      });
    }
  }
  return table;
}

ConvergenceVerdict detect_limit(const ConvergenceTable& table, int window, double tol) {
  if (window < 2) throw Error(ErrorCode::InvalidArgument, "window must be >= 2");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const auto& rows = table.rows;
  if (rows.size() < static_cast<std::size_t>(window)) {
    throw Error(ErrorCode::InsufficientRows, "table has " + std::to_string(rows.size()) +
                                                 " rows, window needs " + std::to_string(window));
  }
  ConvergenceVerdict v;
  v.tolerance = tol;
  v.limit_estimate = rows.back().dimension;
  auto within = [&](const ConvergenceRow& r) { return std::abs(r.dimension - v.limit_estimate) <= tol; };

  std::size_t first = rows.size() - 1;
  while (first > 0 && within(rows[first - 1])) --first;
  v.converged = rows.size() - first >= static_cast<std::size_t>(window);
  if (v.converged) v.achieved_at_n = rows[first].n;
  return v;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "markdown") return TableFormat::Markdown;
  if (name == "json") return TableFormat::Json;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string format_fixed(double value, int decimals) {
  check_decimals(decimals);
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) throw Error(ErrorCode::InvalidArgument, "value too large to format");
  std::string out(buf, end);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string render_table(const ConvergenceTable& table, TableFormat format, int decimals) {
  check_decimals(decimals);
  std::string out;
  switch (format) {
    case TableFormat::Csv:
      out = "N,entropy_bits,split_scale_bits,dimension\n";
      for (const auto& r : table.rows) {
        out += std::to_string(r.n) + "," + format_fixed(r.entropy_bits, decimals) + "," +
               format_fixed(r.split_scale_bits, decimals) + "," +
               format_fixed(r.dimension, decimals) + "\n";
      }
      return out;
    case TableFormat::Markdown:
      out = "| N | " + std::string(entropy_symbol(table.family)) + " | split scale | D_m |\n";
      out += "|---:|---:|---:|---:|\n";
      for (const auto& r : table.rows) {
        out += "| " + std::to_string(r.n) + " | " + format_fixed(r.entropy_bits, decimals) +
               " | " + format_fixed(r.split_scale_bits, decimals) + " | " +
               format_fixed(r.dimension, decimals) + " |\n";
      }
      return out;
    case TableFormat::Json: {
      nlohmann::ordered_json j;
      j["family"] = std::string(family_name(table.family));
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : table.rows) {
        j["rows"].push_back({{"N", r.n},
                             {"entropy_bits", r.entropy_bits},
                             {"split_scale_bits", r.split_scale_bits},
                             {"dimension", r.dimension},
                             {"degenerate", r.degenerate}});
      }
      return j.dump() + "\n";
    }
  }
  return out;
}

std::string render_plot_data(const ConvergenceTable& table, int decimals) {
  std::string out = "N,split_scale_bits,entropy_bits\n";
  for (const auto& r : table.rows) {
    out += std::to_string(r.n) + "," + format_fixed(r.split_scale_bits, decimals) + "," +
           format_fixed(r.entropy_bits, decimals) + "\n";
  }
  return out;
}

std::string render_verdict(const ConvergenceVerdict& verdict, int decimals) {
  std::ostringstream os;
  os << (verdict.converged ? "converged" : "no-convergence")
     << " limit=" << format_fixed(verdict.limit_estimate, decimals);
  if (verdict.achieved_at_n) os << " achieved_at_n=" << *verdict.achieved_at_n;
  char tol[32];
  auto [end, ec] = std::to_chars(tol, tol + sizeof tol, verdict.tolerance);
  os << " tolerance=" << std::string_view(tol, static_cast<std::size_t>(end - tol)) << "\n";
  return os.str();
}

std::string render_verdict_json(const ConvergenceVerdict& verdict) {
  return verdict_json(verdict).dump() + "\n";
}

}  // namespace ifd
