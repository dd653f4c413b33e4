#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifd/families.hpp"
#include "ifd/log_base.hpp"

namespace ifd {

struct ConvergenceRow {
  int n = 0;
  double entropy_bits = 0.0;
  double split_scale_bits = 0.0;
  double dimension = 0.0;
  bool degenerate = false;

  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct ConvergenceTable {
  Family family = Family::Vacuous;
  std::vector<ConvergenceRow> rows;  // strictly increasing n

  friend bool operator==(const ConvergenceTable&, const ConvergenceTable&) = default;
};

struct ConvergenceVerdict {
  bool converged = false;
  double limit_estimate = 0.0;
  std::optional<int> achieved_at_n;
  double tolerance = 0.0;
};

struct SweepOptions {
  /// Worker threads for row evaluation; 0 picks hardware concurrency.
  unsigned threads = 1;
  LogBase base = LogBase::two();
};

/// One row per n in [n_min, n_max]. Row values never depend on `threads`.
/// Throws InvalidRange or FrameTooLarge.
ConvergenceTable run_convergence(Family family, int n_min, int n_max,
                                 const SweepOptions& options = {});

/// Convergence of the dimension column toward its value at the largest n.
/// Throws InvalidArgument (window < 2, tol <= 0) or InsufficientRows.
ConvergenceVerdict detect_limit(const ConvergenceTable& table, int window, double tol);

enum class TableFormat { Csv, Markdown, Json };

/// Throws InvalidArgument for anything other than "csv", "markdown", "json".
TableFormat parse_table_format(std::string_view name);

/// Fixed-point, locale-independent, round-half-to-even on the exact binary
/// value. Throws InvalidArgument unless decimals is in [1, 15].
std::string format_fixed(double value, int decimals);

/// CSV: header `N,entropy_bits,split_scale_bits,dimension` plus one line per
/// row. Markdown mirrors the four-column table layout. JSON keeps full
/// precision regardless of `decimals`.
std::string render_table(const ConvergenceTable& table, TableFormat format, int decimals);

/// `N,split_scale_bits,entropy_bits` rows for plotting entropy against the
/// split scale.
std::string render_plot_data(const ConvergenceTable& table, int decimals);

/// One line: `converged limit=<x> achieved_at_n=<n> tolerance=<tol>` or
/// `no-convergence limit=<x> tolerance=<tol>`.
std::string render_verdict(const ConvergenceVerdict& verdict, int decimals);

std::string render_verdict_json(const ConvergenceVerdict& verdict);

}  // namespace ifd
