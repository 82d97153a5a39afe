#include "lmdi/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace lmdi {

using ordered_json = nlohmann::ordered_json;

DecompositionReport build_report(std::span<const IndicatorRecord> series, const FactorChain& chain, ChainMode mode,
                                 const ZeroPolicy& policy) {
    auto periods = chain_periods(series, chain, mode);
    auto cumulative = decompose_additive(PeriodPair(series.front(), series.back()), chain);
    std::vector<Adjustment> adjustments;
    for (const auto& r : series) {
        if (r.is_adjusted()) adjustments.push_back({r.year, {r.adjusted.begin(), r.adjusted.end()}});
    }
    return {chain, mode, policy, std::move(adjustments), std::move(periods), std::move(cumulative)};
}

ReportFormat parse_format(std::string_view token) {
    if (token == "csv") return ReportFormat::Csv;
    if (token == "json") return ReportFormat::Json;
    throw Error(ErrorKind::Format, "unsupported report format '" + std::string(token) + "' (expected csv or json)");
}

std::string period_label(const EffectVector& ev) {
    return std::to_string(ev.start_year) + "-" + std::to_string(ev.end_year);
}

std::string format_fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

namespace {

void csv_rows(std::string& out, const std::string& label, const EffectVector& ev) {
    out += label + "," + format_fixed2(ev.delta_c);
    for (const auto& e : ev.effects) out += "," + format_fixed2(e.value);
    out += "\n,";
    for (const auto& e : ev.effects) out += e.share ? ",(" + format_fixed2(*e.share) + "%)" : std::string(",n/a");
    out += '\n';
}

std::string write_csv(const DecompositionReport& r) {
    std::string out = "# chain=" + r.chain.name() + "; mode=" + to_string(r.mode) +
                      "; zero_policy=" + to_string(r.zero_policy.mode);
    if (r.zero_policy.mode == ZeroMode::Substitute) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", r.zero_policy.delta);
        out += std::string("; delta=") + buf;
    }
    out += '\n';
    for (const auto& a : r.adjustments) {
        out += "# adjusted " + std::to_string(a.year) + ":";
        for (const auto& k : a.keys) out += " " + k;
        out += '\n';
    }
    out += "Year,ΔC";
    for (const auto& f : r.chain.factors()) out += "," + f.name;
    out += '\n';
    for (const auto& p : r.periods) csv_rows(out, period_label(p), p);
    csv_rows(out, "cumulative " + period_label(r.cumulative), r.cumulative);
    return out;
}

ordered_json effect_vector_json(const EffectVector& ev) {
    ordered_json j;
    j["period"] = period_label(ev);
    j["start_year"] = ev.start_year;
    j["end_year"] = ev.end_year;
    j["delta_c"] = ev.delta_c;
    j["weight"] = ev.weight;
    auto effects = ordered_json::array();
    for (const auto& e : ev.effects) {
        ordered_json je;
        je["name"] = e.name;
        je["value"] = e.value;
        je["share"] = e.share ? ordered_json(*e.share) : ordered_json(nullptr);
        je["sign"] = to_string(classify(e.value));
        je["degenerate"] = e.degenerate;
        effects.push_back(std::move(je));
    }
    j["effects"] = std::move(effects);
    return j;
}

EffectVector effect_vector_from_json(const ordered_json& j) {
    EffectVector ev;
    ev.start_year = j.at("start_year").get<int>();
    ev.end_year = j.at("end_year").get<int>();
    ev.delta_c = j.at("delta_c").get<double>();
    ev.weight = j.at("weight").get<double>();
    for (const auto& je : j.at("effects")) {
        Effect e;
        e.name = je.at("name").get<std::string>();
        e.value = je.at("value").get<double>();
        if (!je.at("share").is_null()) e.share = je.at("share").get<double>();
        e.degenerate = je.at("degenerate").get<bool>();
        ev.effects.push_back(std::move(e));
    }
    return ev;
}

std::string write_json(const DecompositionReport& r) {
    ordered_json j;
    ordered_json chain;
    chain["name"] = r.chain.name();
    chain["aggregate"] = r.chain.aggregate();
    auto factors = ordered_json::array();
    for (const auto& f : r.chain.factors()) {
        factors.push_back({{"name", f.name},
                           {"numerator", f.numerator},
                           {"denominator", f.denominator ? ordered_json(*f.denominator) : ordered_json(nullptr)}});
    }
    chain["factors"] = std::move(factors);
    j["chain"] = std::move(chain);
    j["mode"] = to_string(r.mode);
    j["zero_policy"] = {{"mode", to_string(r.zero_policy.mode)}, {"delta", r.zero_policy.delta}};
    auto adjusted = ordered_json::array();
    for (const auto& a : r.adjustments) adjusted.push_back({{"year", a.year}, {"keys", a.keys}});
    j["adjusted"] = std::move(adjusted);
    auto periods = ordered_json::array();
    for (const auto& p : r.periods) periods.push_back(effect_vector_json(p));
    j["periods"] = std::move(periods);
    j["cumulative"] = effect_vector_json(r.cumulative);
    return j.dump(2) + "\n";
}

}  // namespace

std::string write_report(const DecompositionReport& report, ReportFormat format) {
    return format == ReportFormat::Csv ? write_csv(report) : write_json(report);
}

DecompositionReport parse_report_json(std::string_view text) {
    try {
        const auto j = ordered_json::parse(text);
        const auto& jc = j.at("chain");
        std::vector<FactorDef> factors;
        for (const auto& jf : jc.at("factors")) {
            FactorDef f{jf.at("name").get<std::string>(), jf.at("numerator").get<std::string>(), std::nullopt};
            if (!jf.at("denominator").is_null()) f.denominator = jf.at("denominator").get<std::string>();
            factors.push_back(std::move(f));
        }
        FactorChain chain(jc.at("name").get<std::string>(), jc.at("aggregate").get<std::string>(), std::move(factors));

        const auto mode_token = j.at("mode").get<std::string>();
        ChainMode mode;
        if (mode_token == "annual") mode = ChainMode::Annual;
        else if (mode_token == "base_year") mode = ChainMode::BaseYear;
        else throw Error(ErrorKind::Format, "unknown chaining mode '" + mode_token + "'");

        const auto& jz = j.at("zero_policy");
        ZeroPolicy policy{jz.at("mode").get<std::string>() == "substitute" ? ZeroMode::Substitute : ZeroMode::Reject,
                          jz.at("delta").get<double>()};

        std::vector<Adjustment> adjustments;
        for (const auto& ja : j.at("adjusted")) {
            adjustments.push_back({ja.at("year").get<int>(), ja.at("keys").get<std::vector<std::string>>()});
        }
        std::vector<EffectVector> periods;
        for (const auto& jp : j.at("periods")) periods.push_back(effect_vector_from_json(jp));
        return {std::move(chain), mode, policy, std::move(adjustments), std::move(periods),
                effect_vector_from_json(j.at("cumulative"))};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Format, std::string("malformed report JSON: ") + e.what());
    }
}

}  // namespace lmdi
