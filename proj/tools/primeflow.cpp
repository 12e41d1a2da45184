#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "primeflow/errors.hpp"
#include "primeflow/report.hpp"

namespace {

uint64_t parse_natural(const std::string& field, const char* what) {
    uint64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw primeflow::ConfigError(std::string("--grid: bad ") + what +
                                     " '" + field + "'");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
        const size_t next = s.find(sep, pos);
        fields.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return fields;
}

// Either "start:stop:ppd" (log-spaced expansion) or a comma-separated list
// of explicit points.
std::vector<uint64_t> parse_grid(const std::string& spec) {
    if (spec.find(':') != std::string::npos) {
        const auto fields = split(spec, ':');
        if (fields.size() != 3)
            throw primeflow::ConfigError("--grid: expected start:stop:ppd");
        const uint64_t start = parse_natural(fields[0], "start");
        const uint64_t stop = parse_natural(fields[1], "stop");
        const uint64_t ppd = parse_natural(fields[2], "points-per-decade");
        if (ppd == 0 || ppd > 1'000'000)
            throw primeflow::ConfigError("--grid: points-per-decade out of range");
        return primeflow::expand_grid(start, stop,
                                      static_cast<unsigned>(ppd));
    }
    std::vector<uint64_t> grid;
    for (const std::string& field : split(spec, ','))
        grid.push_back(parse_natural(field, "grid point"));
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"primeflow: prime-density laboratory"};
    app.require_subcommand(1);

    primeflow::RunConfig config;
    std::string format = "csv";
    std::string grid_spec;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", config.out_path, "write the artifact here");
        cmd->add_option("--seed", config.seed, "seed for self-check batches");
        cmd->add_option("--limit-sieve", config.limits.sieve_limit,
                        "largest n handled by the segmented sieve");
        cmd->add_option("--limit-fast", config.limits.fast_limit,
                        "largest n handled by the fast counter");
    };

    CLI::App* pi = app.add_subcommand("pi", "exact prime count pi(n)");
    pi->add_option("--n", config.n, "count primes up to n");
    add_common(pi);

    CLI::App* mertens = app.add_subcommand(
        "mertens", "reciprocal-prime sums against log log");
    mertens->add_option("--grid", grid_spec,
                        "start:stop:ppd or comma-separated points");
    add_common(mertens);

    CLI::App* density =
        app.add_subcommand("density", "prime density against both models");
    density->add_option("--n", config.n, "scale to evaluate");
    add_common(density);

    CLI::App* flow = app.add_subcommand("flow", "density flow evaluation");
    flow->add_option("--t", config.t, "flow time (log scale ratio)");
    flow->add_option("--d0", config.d0, "initial density");
    flow->add_option("--order", config.order,
                     "evaluate the series at this order instead");
    add_common(flow);

    CLI::App* scale = app.add_subcommand(
        "scale-check", "inverse-density scale relation between two n");
    scale->add_option("--n1", config.n1, "first scale");
    scale->add_option("--n2", config.n2, "second scale");
    add_common(scale);

    CLI::App* report =
        app.add_subcommand("report", "full multi-section table over a grid");
    report->add_option("--grid", grid_spec,
                       "start:stop:ppd or comma-separated points");
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version succeed, bad flags do not
    }

    try {
        if (app.got_subcommand(pi))
            config.subcommand = primeflow::Subcommand::Pi;
        else if (app.got_subcommand(mertens))
            config.subcommand = primeflow::Subcommand::Mertens;
        else if (app.got_subcommand(density))
            config.subcommand = primeflow::Subcommand::Density;
        else if (app.got_subcommand(flow))
            config.subcommand = primeflow::Subcommand::Flow;
        else if (app.got_subcommand(scale))
            config.subcommand = primeflow::Subcommand::ScaleCheck;
        else
            config.subcommand = primeflow::Subcommand::Report;

        if (!grid_spec.empty()) config.grid = parse_grid(grid_spec);
        config.format = format == "json" ? primeflow::OutputFormat::Json
                                         : primeflow::OutputFormat::Csv;

        const std::string artifact = primeflow::run(config);
        if (!config.out_path) std::cout << artifact;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "primeflow: " << e.what() << "\n";
        return primeflow::exit_code_for_current_exception();
    }
}
