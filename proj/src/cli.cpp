#include "lmdi/cli.hpp"

#include <filesystem>
#include <ostream>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "lmdi/chain_spec.hpp"
#include "lmdi/dataset.hpp"
#include "lmdi/kaya.hpp"
#include "lmdi/report.hpp"
#include "lmdi/svg.hpp"

namespace lmdi::cli {

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
    std::string input;
    std::string chain = "kaya5";
    std::string policy = "reject";
    double delta = ZeroPolicy::kDefaultDelta;

    ZeroPolicy zero_policy() const {
        ZeroPolicy p{policy == "substitute" ? ZeroMode::Substitute : ZeroMode::Reject, delta};
        p.validate();
        return p;
    }

    FactorChain factor_chain() const { return chain == "kaya5" ? kaya::kaya_chain() : load_chain_spec(chain); }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("input", o.input, "Dataset CSV")->required();
    cmd->add_option("--chain", o.chain, "kaya5 or a chain spec file")->capture_default_str();
    cmd->add_option("--policy", o.policy, "Zero-value policy")
        ->check(CLI::IsMember({"reject", "substitute"}))
        ->capture_default_str();
    cmd->add_option("--delta", o.delta, "Substitution value for the substitute policy")->capture_default_str();
}

using Outputs = std::vector<std::pair<fs::path, std::string>>;

void commit(const Outputs& outputs) {
    for (const auto& [path, bytes] : outputs) write_file_atomic(path, bytes);
}

fs::path with_mode_suffix(const fs::path& p, ChainMode mode) {
    auto out = p.parent_path() / p.stem();
    out += std::string(".") + to_string(mode);
    out += p.extension();
    return out;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config:
        case ErrorKind::Format: return kExitUsage;
        case ErrorKind::Domain:
        case ErrorKind::NonPositive: return kExitDomain;
        default: return kExitData;
    }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Additive LMDI decomposition of an aggregate over a factor chain", "lmdi"};
    app.require_subcommand(1);

    CommonOptions validate_opts;
    auto* validate = app.add_subcommand("validate", "Check a dataset without writing anything");
    add_common(validate, validate_opts);

    CommonOptions dec_opts;
    std::string mode_token = "annual", format_token = "json", output, svg, svg_dir;
    auto* decompose = app.add_subcommand("decompose", "Decompose a dataset and write a report");
    add_common(decompose, dec_opts);
    decompose->add_option("--mode", mode_token, "Chaining mode")
        ->check(CLI::IsMember({"annual", "base_year", "both"}))
        ->capture_default_str();
    decompose->add_option("--format", format_token, "Report format (csv or json)")->capture_default_str();
    decompose->add_option("-o,--output", output, "Report path (stdout when omitted, except for --mode both)");
    decompose->add_option("--svg", svg, "Waterfall SVG of the cumulative first-to-last pair");
    decompose->add_option("--svg-dir", svg_dir, "Directory for one waterfall SVG per period");

    CommonOptions chart_opts;
    int from_year = 0, to_year = 0;
    std::string chart_out;
    auto* chart = app.add_subcommand("chart", "Render a waterfall SVG for one pair of years");
    add_common(chart, chart_opts);
    chart->add_option("--from", from_year, "Start year (default: first)");
    chart->add_option("--to", to_year, "End year (default: last)");
    chart->add_option("-o,--output", chart_out, "SVG path")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) {
            const auto chain = validate_opts.factor_chain();
            const auto records =
                load_dataset(fs::path(validate_opts.input), LoadOptions::for_chain(chain, validate_opts.zero_policy()));
            out << records.size() << " rows, " << records.front().year << "–" << records.back().year << "\n";
            for (const auto& r : records) {
                for (const auto& k : r.adjusted) out << "adjusted " << r.year << " " << k << "\n";
            }
            return kExitOk;
        }

        if (decompose->parsed()) {
            const auto format = parse_format(format_token);
            const auto policy = dec_opts.zero_policy();
            const auto chain = dec_opts.factor_chain();
            const auto records = load_dataset(fs::path(dec_opts.input), LoadOptions::for_chain(chain, policy));

            std::vector<ChainMode> modes;
            if (mode_token == "annual" || mode_token == "both") modes.push_back(ChainMode::Annual);
            if (mode_token == "base_year" || mode_token == "both") modes.push_back(ChainMode::BaseYear);
            if (modes.size() > 1 && output.empty()) {
                err << "error: --mode both requires --output\n";
                return kExitUsage;
            }

            Outputs outputs;
            std::string to_stdout;
            for (auto mode : modes) {
                const auto report = build_report(records, chain, mode, policy);
                auto bytes = write_report(report, format);
                if (output.empty()) to_stdout += bytes;
                else outputs.emplace_back(modes.size() > 1 ? with_mode_suffix(output, mode) : fs::path(output),
                                          std::move(bytes));
                if (!svg_dir.empty()) {
                    for (const auto& p : report.periods) {
                        outputs.emplace_back(fs::path(svg_dir) / (std::string(to_string(mode)) + "_" + period_label(p) + ".svg"),
                                             render_waterfall_svg(p));
                    }
                }
                if (!svg.empty() && mode == modes.front()) {
                    outputs.emplace_back(svg, render_waterfall_svg(report.cumulative,
                                                                   "Cumulative decomposition " +
                                                                       period_label(report.cumulative)));
                }
            }
            if (!svg_dir.empty()) fs::create_directories(svg_dir);
            commit(outputs);
            out << to_stdout;
            return kExitOk;
        }

        if (chart->parsed()) {
            const auto policy = chart_opts.zero_policy();
            const auto chain = chart_opts.factor_chain();
            const auto records = load_dataset(fs::path(chart_opts.input), LoadOptions::for_chain(chain, policy));
            auto find = [&](int year, const IndicatorRecord& fallback) -> const IndicatorRecord& {
                if (year == 0) return fallback;
                for (const auto& r : records) {
                    if (r.year == year) return r;
                }
                throw Error(ErrorKind::Input, "year " + std::to_string(year) + " not in dataset");
            };
            const auto ev =
                decompose_additive(PeriodPair(find(from_year, records.front()), find(to_year, records.back())), chain);
            write_waterfall_svg(ev, chart_out);
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const fs::filesystem_error& e) {
        err << "error [io]: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace lmdi::cli
