#include "primeflow/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "primeflow/density.hpp"
#include "primeflow/errors.hpp"
#include "primeflow/mertens.hpp"
#include "primeflow/rgflow.hpp"

namespace primeflow {

namespace {

using ordered_json = nlohmann::ordered_json;

// [0, 1) from the top 53 bits; pinned mapping so the stream does not depend
// on the library's distribution internals.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Seeded internal cross-check: closed form vs numeric integration and the
// group law, well inside the series radius. Violations mean a broken build,
// not bad input, hence VerificationError (exit code 3).
void verify_flow_batch(uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 32; ++i) {
        const double q = -0.8 + 1.6 * unit_double(rng);  // q = t * d0
        const double d0 = 0.05 + 0.9 * unit_double(rng);
        const double t = q / d0;
        const double closed = flow_closed_form(t, d0);
        const double numeric = flow_numeric(t, d0, {}, 0);
        if (std::fabs(closed - numeric) > 1e-8)
            throw VerificationError(
                "flow self-check: closed form and integrator disagree");
        if (group_law_residual(0.3 * t, 0.7 * t, d0) > 1e-10)
            throw VerificationError("flow self-check: group law violated");
    }
}

void check_row(const ReportRow& row) {
    const bool finite = std::isfinite(row.density) &&
                        std::isfinite(row.inv_log) &&
                        std::isfinite(row.li_over_n) &&
                        std::isfinite(row.fbar) && std::isfinite(row.residual) &&
                        std::isfinite(row.rg_pred);
    if (!finite || row.pi == 0 || row.density <= 0.0 || row.density >= 1.0 ||
        row.inv_log <= 0.0 || row.li_over_n <= 0.0 || row.fbar <= 0.0 ||
        row.residual <= 0.0 || row.residual >= 1.0 || row.rg_pred <= 0.0 ||
        row.rg_pred >= 1.0)
        throw VerificationError("report row failed invariant checks at n = " +
                                std::to_string(row.n));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out.write(content.data(), content.size());
    if (!out) throw ConfigError("failed writing output file: " + path);
}

std::string render(const ordered_json& j) { return j.dump() + "\n"; }

uint64_t require_n(const std::optional<uint64_t>& n, const char* flag) {
    if (!n) throw ConfigError(std::string("missing required flag ") + flag);
    return *n;
}

std::string run_pi(const RunConfig& config) {
    const uint64_t n = require_n(config.n, "--n");
    const PrimePi r = pi_auto(n, config.limits);
    if (config.format == OutputFormat::Json) {
        ordered_json j;
        j["n"] = r.n;
        j["pi"] = r.count;
        return render(j);
    }
    return "n,pi\n" + std::to_string(r.n) + "," + std::to_string(r.count) +
           "\n";
}

std::string run_mertens(const RunConfig& config) {
    if (config.grid.empty()) throw ConfigError("mertens: --grid is required");
    const auto samples = mertens_residual_curve(config.grid);
    if (config.format == OutputFormat::Json) {
        ordered_json rows = ordered_json::array();
        for (const MertensSample& s : samples) {
            ordered_json j;
            j["lambda"] = s.lambda;
            j["sum"] = s.sum;
            j["loglog"] = s.loglog;
            j["fbar"] = s.fbar;
            j["residual"] = s.residual;
            rows.push_back(std::move(j));
        }
        ordered_json doc;
        doc["samples"] = std::move(rows);
        return render(doc);
    }
    std::string out = "lambda,sum,loglog,fbar,residual\n";
    for (const MertensSample& s : samples) {
        out += std::to_string(s.lambda);
        out += ',';
        out += format_double(s.sum);
        out += ',';
        out += format_double(s.loglog);
        out += ',';
        out += format_double(s.fbar);
        out += ',';
        out += format_double(s.residual);
        out += '\n';
    }
    return out;
}

std::string run_density(const RunConfig& config) {
    const uint64_t n = require_n(config.n, "--n");
    const ModelComparison cmp = compare_models(n, config.limits);
    if (config.format == OutputFormat::Json) {
        ordered_json j;
        j["n"] = cmp.sample.n;
        j["pi"] = cmp.sample.pi;
        j["density"] = cmp.sample.density;
        j["inv_log"] = cmp.inv_log;
        j["li_over_n"] = cmp.li_over_n;
        j["rel_err_invlog"] = cmp.rel_err_invlog;
        j["rel_err_li"] = cmp.rel_err_li;
        return render(j);
    }
    return "n,pi,density,inv_log,li_over_n,rel_err_invlog,rel_err_li\n" +
           std::to_string(cmp.sample.n) + "," + std::to_string(cmp.sample.pi) +
           "," + format_double(cmp.sample.density) + "," +
           format_double(cmp.inv_log) + "," + format_double(cmp.li_over_n) +
           "," + format_double(cmp.rel_err_invlog) + "," +
           format_double(cmp.rel_err_li) + "\n";
}

std::string run_flow(const RunConfig& config) {
    if (!config.t) throw ConfigError("missing required flag --t");
    if (!config.d0) throw ConfigError("missing required flag --d0");
    verify_flow_batch(config.seed);
    const double value = config.order
                             ? flow_series(*config.t, *config.d0, *config.order)
                             : flow_closed_form(*config.t, *config.d0);
    if (config.format == OutputFormat::Json) {
        ordered_json j;
        j["t"] = *config.t;
        j["d0"] = *config.d0;
        if (config.order) j["order"] = *config.order;
        j["flow"] = value;
        return render(j);
    }
    return format_double(value) + "\n";
}

std::string run_scale_check(const RunConfig& config) {
    const uint64_t n1 = require_n(config.n1, "--n1");
    const uint64_t n2 = require_n(config.n2, "--n2");
    if (n1 == n2) throw ConfigError("scale-check: --n1 and --n2 must differ");
    const ScaleCheckRecord r = scale_relation_check(
        density_at(n1, config.limits), density_at(n2, config.limits));
    if (config.format == OutputFormat::Json) {
        ordered_json j;
        j["n1"] = r.n1;
        j["n2"] = r.n2;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["abs_err"] = r.abs_err;
        j["rel_err"] = r.rel_err;
        return render(j);
    }
    return "n1,n2,lhs,rhs,abs_err,rel_err\n" + std::to_string(r.n1) + "," +
           std::to_string(r.n2) + "," + format_double(r.lhs) + "," +
           format_double(r.rhs) + "," + format_double(r.abs_err) + "," +
           format_double(r.rel_err) + "\n";
}

std::string run_report(const RunConfig& config) {
    if (config.grid.empty()) throw ConfigError("report: --grid is required");
    verify_flow_batch(config.seed);
    const auto rows = emit_report(config.grid, config.limits);
    if (config.format == OutputFormat::Json) {
        ordered_json arr = ordered_json::array();
        for (const ReportRow& r : rows) {
            ordered_json j;
            j["n"] = r.n;
            j["pi"] = r.pi;
            j["density"] = r.density;
            j["inv_log"] = r.inv_log;
            j["li_over_n"] = r.li_over_n;
            j["fbar"] = r.fbar;
            j["residual"] = r.residual;
            j["rg_pred"] = r.rg_pred;
            j["scale_lhs"] = r.scale_lhs ? ordered_json(*r.scale_lhs)
                                         : ordered_json(nullptr);
            j["scale_rhs"] = r.scale_rhs ? ordered_json(*r.scale_rhs)
                                         : ordered_json(nullptr);
            j["scale_rel_err"] = r.scale_rel_err
                                     ? ordered_json(*r.scale_rel_err)
                                     : ordered_json(nullptr);
            arr.push_back(std::move(j));
        }
        ordered_json doc;
        doc["rows"] = std::move(arr);
        return render(doc);
    }
    std::string out = std::string(kReportCsvHeader) + "\n";
    for (const ReportRow& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.pi);
        out += ',';
        out += format_double(r.density);
        out += ',';
        out += format_double(r.inv_log);
        out += ',';
        out += format_double(r.li_over_n);
        out += ',';
        out += format_double(r.fbar);
        out += ',';
        out += format_double(r.residual);
        out += ',';
        out += format_double(r.rg_pred);
        out += ',';
        if (r.scale_lhs) out += format_double(*r.scale_lhs);
        out += ',';
        if (r.scale_rhs) out += format_double(*r.scale_rhs);
        out += ',';
        if (r.scale_rel_err) out += format_double(*r.scale_rel_err);
        out += '\n';
    }
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

std::vector<uint64_t> expand_grid(uint64_t start, uint64_t stop,
                                  unsigned points_per_decade) {
    if (points_per_decade < 1)
        throw ConfigError("grid: points-per-decade must be >= 1");
    if (start < 2) throw ConfigError("grid: start must be >= 2");
    if (start > stop) throw ConfigError("grid: start must be <= stop");
    std::vector<uint64_t> grid;
    for (unsigned k = 0;; ++k) {
        const double value =
            static_cast<double>(start) *
            std::pow(10.0, static_cast<double>(k) / points_per_decade);
        if (value >= 9.0e18) break;  // past any representable request
        const auto v = static_cast<uint64_t>(std::llround(value));
        if (v > stop) break;
        if (grid.empty() || v > grid.back()) grid.push_back(v);
    }
    return grid;
}

std::vector<ReportRow> emit_report(const std::vector<uint64_t>& grid,
                                   const CountLimits& limits) {
    if (grid.empty()) throw ConfigError("report: empty grid");
    // The curve call also rejects non-monotonic grids and entries < 3.
    const auto curve = mertens_residual_curve(grid);
    if (std::fabs(curve.front().sum - reciprocal_prime_sum(grid.front())) >
        1e-12)
        throw VerificationError(
            "report: incremental and direct reciprocal sums disagree");

    std::vector<DensitySample> samples;
    samples.reserve(grid.size());
    for (uint64_t n : grid) samples.push_back(density_at(n, limits));
    const DensitySample& anchor = samples.front();

    std::vector<ReportRow> rows(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        ReportRow& row = rows[i];
        const DensitySample& s = samples[i];
        row.n = s.n;
        row.pi = s.pi;
        row.density = s.density;
        row.inv_log = 1.0 / s.log_n;
        row.li_over_n = li(static_cast<double>(s.n)) / static_cast<double>(s.n);
        row.fbar = curve[i].fbar;
        row.residual = curve[i].residual;
        row.rg_pred = predict_density(s.n, anchor).density;
        if (i > 0) {
            const ScaleCheckRecord rec = scale_relation_check(s, samples[i - 1]);
            row.scale_lhs = rec.lhs;
            row.scale_rhs = rec.rhs;
            row.scale_rel_err = rec.rel_err;
        }
        check_row(row);
    }
    return rows;
}

std::string run(const RunConfig& config) {
    std::string artifact;
    switch (config.subcommand) {
        case Subcommand::Pi:
            artifact = run_pi(config);
            break;
        case Subcommand::Mertens:
            artifact = run_mertens(config);
            break;
        case Subcommand::Density:
            artifact = run_density(config);
            break;
        case Subcommand::Flow:
            artifact = run_flow(config);
            break;
        case Subcommand::ScaleCheck:
            artifact = run_scale_check(config);
            break;
        case Subcommand::Report:
            artifact = run_report(config);
            break;
    }
    if (config.out_path) write_file(*config.out_path, artifact);
    return artifact;
}

int exit_code_for_current_exception() {
    try {
        throw;
    } catch (const VerificationError&) {
        return 3;
    } catch (const LimitError&) {
        return 2;
    } catch (const ConfigError&) {
        return 1;
    } catch (const Error&) {
        return 1;
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace primeflow
