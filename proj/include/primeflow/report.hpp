#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primeflow/prime_count.hpp"

namespace primeflow {

enum class Subcommand { Pi, Mertens, Density, Flow, ScaleCheck, Report };

enum class OutputFormat { Csv, Json };

struct RunConfig {
    Subcommand subcommand = Subcommand::Report;
    std::vector<uint64_t> grid;  // already expanded, strictly increasing

    // Scalar inputs; which ones matter depends on the subcommand.
    std::optional<uint64_t> n;
    std::optional<uint64_t> n1;
    std::optional<uint64_t> n2;
    std::optional<double> t;
    std::optional<double> d0;
    std::optional<unsigned> order;

    CountLimits limits;
    OutputFormat format = OutputFormat::Csv;
    std::optional<std::string> out_path;
    uint64_t seed = 1;
};

// Log-spaced grid: round(start * 10^(k/ppd)) for k = 0, 1, ... while the
// value stays <= stop; rounded to nearest integer and deduplicated.
std::vector<uint64_t> expand_grid(uint64_t start, uint64_t stop,
                                  unsigned points_per_decade);

// One row of the multi-section report. Scale-relation columns are empty on
// the first row (no previous pair).
struct ReportRow {
    uint64_t n = 0;
    uint64_t pi = 0;
    double density = 0.0;
    double inv_log = 0.0;
    double li_over_n = 0.0;
    double fbar = 0.0;
    double residual = 0.0;
    double rg_pred = 0.0;  // flow prediction anchored at the first grid point
    std::optional<double> scale_lhs;
    std::optional<double> scale_rhs;
    std::optional<double> scale_rel_err;
};

std::vector<ReportRow> emit_report(const std::vector<uint64_t>& grid,
                                   const CountLimits& limits = {});

// Executes the configured pipeline and returns the rendered artifact
// (also written to config.out_path when set). Identical config + seed gives
// byte-identical output. Throws ConfigError / LimitError / VerificationError.
std::string run(const RunConfig& config);

// Shortest representation at 15 significant digits, locale-independent.
std::string format_double(double x);

// Exit code contract: 0 ok, 1 config error, 2 limit exceeded,
// 3 verification failure.
int exit_code_for_current_exception();

inline constexpr char kReportCsvHeader[] =
    "n,pi,density,inv_log,li_over_n,fbar,residual,rg_pred,scale_lhs,"
    "scale_rhs,scale_rel_err";

}  // namespace primeflow
