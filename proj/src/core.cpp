#include "lmdi/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lmdi {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Config: return "config";
        case ErrorKind::Input: return "input";
        case ErrorKind::MissingColumn: return "missing-column";
        case ErrorKind::NonNumeric: return "non-numeric";
        case ErrorKind::DuplicateYear: return "duplicate-year";
        case ErrorKind::NonPositive: return "non-positive";
        case ErrorKind::Io: return "io";
        case ErrorKind::Format: return "format";
    }
    return "unknown";
}

const char* to_string(ChainMode mode) {
    return mode == ChainMode::Annual ? "annual" : "base_year";
}

const char* to_string(ZeroMode mode) {
    return mode == ZeroMode::Reject ? "reject" : "substitute";
}

const char* to_string(EffectSign sign) {
    switch (sign) {
        case EffectSign::Expanding: return "expanding";
        case EffectSign::Restraining: return "restraining";
        case EffectSign::Neutral: return "neutral";
    }
    return "neutral";
}

EffectSign classify(double effect) {
    if (effect > 0.0) return EffectSign::Expanding;
    if (effect < 0.0) return EffectSign::Restraining;
    return EffectSign::Neutral;
}

double IndicatorRecord::at(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) {
        throw Error(ErrorKind::Input,
                    "record for year " + std::to_string(year) + " has no indicator '" + key + "'");
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// FactorChain

std::optional<std::string> telescoping_violation(const std::string& aggregate,
                                                 std::span<const FactorDef> factors) {
    if (factors.empty()) return "chain has no factors";
    if (aggregate.empty()) return "aggregate key is empty";

    std::map<std::string, int> as_num, as_den;
    std::set<std::string> names;
    for (const auto& f : factors) {
        if (f.name.empty()) return "factor with empty name";
        if (!names.insert(f.name).second) return "duplicate factor name '" + f.name + "'";
        if (f.numerator.empty()) return "factor '" + f.name + "' has an empty numerator";
        ++as_num[f.numerator];
        if (f.denominator) {
            if (f.denominator->empty()) return "factor '" + f.name + "' has an empty denominator";
            if (*f.denominator == f.numerator) {
                return "factor '" + f.name + "' divides '" + f.numerator + "' by itself";
            }
            ++as_den[*f.denominator];
        }
    }

    if (as_num[aggregate] != 1 || as_den[aggregate] != 0) {
        return "aggregate '" + aggregate + "' must appear exactly once, as a numerator";
    }
    std::set<std::string> keys;
    for (const auto& [k, _] : as_num) keys.insert(k);
    for (const auto& [k, _] : as_den) keys.insert(k);
    for (const auto& k : keys) {
        if (k == aggregate) continue;
        if (as_num[k] != 1 || as_den[k] != 1) {
            std::ostringstream os;
            os << "key '" << k << "' appears " << as_num[k] << "x as numerator and " << as_den[k]
               << "x as denominator; the chain does not telescope to '" << aggregate << "'";
            return os.str();
        }
    }
    return std::nullopt;
}

FactorChain::FactorChain(std::string name, std::string aggregate, std::vector<FactorDef> factors)
    : name_(std::move(name)), aggregate_(std::move(aggregate)), factors_(std::move(factors)) {
    if (auto why = telescoping_violation(aggregate_, factors_)) {
        throw Error(ErrorKind::Config, "invalid factor chain '" + name_ + "': " + *why);
    }
}

std::vector<std::string> FactorChain::keys() const {
    std::vector<std::string> out{aggregate_};
    auto add = [&](const std::string& k) {
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    };
    for (const auto& f : factors_) {
        add(f.numerator);
        if (f.denominator) add(*f.denominator);
    }
    return out;
}

// ---------------------------------------------------------------------------

PeriodPair::PeriodPair(IndicatorRecord s, IndicatorRecord e) : start(std::move(s)), end(std::move(e)) {
    if (end.year <= start.year) {
        throw Error(ErrorKind::Input, "period end year " + std::to_string(end.year) +
                                          " must be after start year " + std::to_string(start.year));
    }
}

double EffectVector::sum() const {
    double s = 0.0;
    for (const auto& e : effects) s += e.value;
    return s;
}

const Effect& EffectVector::operator[](std::string_view name) const {
    for (const auto& e : effects) {
        if (e.name == name) return e;
    }
    throw Error(ErrorKind::Input, "no effect named '" + std::string(name) + "'");
}

void ZeroPolicy::validate() const {
    if (!(delta > 0.0 && delta < 1e-6)) {
        std::ostringstream os;
        os << "zero-policy delta must lie in (0, 1e-6), got " << delta;
        throw Error(ErrorKind::Config, os.str());
    }
}

double log_mean(double a, double b) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw Error(ErrorKind::Domain, "log_mean: argument a must be positive and finite");
    }
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw Error(ErrorKind::Domain, "log_mean: argument b must be positive and finite");
    }
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    if (hi - lo <= kLogMeanCloseness * hi) return a;
    // log1p keeps the denominator accurate when a/b is close to 1.
    const double d = hi - lo;
    const double l = d / std::log1p(d / lo);
    return std::clamp(l, lo, hi);
}

namespace {

void require_positive(const IndicatorRecord& r, const std::vector<std::string>& keys) {
    std::string bad;
    for (const auto& k : keys) {
        const double v = r.at(k);
        if (!(v > 0.0) || !std::isfinite(v)) {
            if (!bad.empty()) bad += ", ";
            bad += k;
        }
    }
    if (!bad.empty()) {
        throw Error(ErrorKind::Domain, "year " + std::to_string(r.year) +
                                           ": non-positive indicator(s) " + bad);
    }
}

// ln(v_t / v_0) for every key of the chain.
std::map<std::string, double> log_ratios(const PeriodPair& pair, const FactorChain& chain) {
    const auto keys = chain.keys();
    require_positive(pair.start, keys);
    require_positive(pair.end, keys);
    std::map<std::string, double> out;
    for (const auto& k : keys) out[k] = std::log(pair.end.at(k) / pair.start.at(k));
    return out;
}

double factor_log_ratio(const FactorDef& f, const std::map<std::string, double>& lr) {
    double v = lr.at(f.numerator);
    if (f.denominator) v -= lr.at(*f.denominator);
    return v;
}

}  // namespace

EffectVector decompose_additive(const PeriodPair& pair, const FactorChain& chain) {
    const auto lr = log_ratios(pair, chain);
    const double c0 = pair.start.at(chain.aggregate());
    const double ct = pair.end.at(chain.aggregate());

    EffectVector ev;
    ev.start_year = pair.start_year();
    ev.end_year = pair.end_year();
    ev.delta_c = ct - c0;
    ev.weight = log_mean(ct, c0);

    auto touched = [&](const std::string& k) {
        return pair.start.adjusted.contains(k) || pair.end.adjusted.contains(k);
    };
    const bool aggregate_touched = touched(chain.aggregate());

    ev.effects.reserve(chain.size());
    for (const auto& f : chain.factors()) {
        Effect e;
        e.name = f.name;
        e.value = ev.weight * factor_log_ratio(f, lr);
        e.degenerate = aggregate_touched || touched(f.numerator) || (f.denominator && touched(*f.denominator));
        ev.effects.push_back(std::move(e));
    }
    const auto shares = contribution_shares(ev);
    for (std::size_t i = 0; i < shares.size(); ++i) ev.effects[i].share = shares[i];
    return ev;
}

std::vector<MultiplicativeEffect> decompose_multiplicative(const PeriodPair& pair, const FactorChain& chain) {
    const auto lr = log_ratios(pair, chain);
    std::vector<MultiplicativeEffect> out;
    out.reserve(chain.size());
    for (const auto& f : chain.factors()) out.push_back({f.name, std::exp(factor_log_ratio(f, lr))});
    return out;
}

std::vector<EffectVector> chain_periods(std::span<const IndicatorRecord> series,
                                        const FactorChain& chain, ChainMode mode) {
    if (series.size() < 2) {
        throw Error(ErrorKind::Input, "need at least 2 records to decompose, got " +
                                          std::to_string(series.size()));
    }
    for (std::size_t i = 1; i < series.size(); ++i) {
        if (series[i].year == series[i - 1].year) {
            throw Error(ErrorKind::DuplicateYear, "duplicate year " + std::to_string(series[i].year), i + 1);
        }
        if (series[i].year < series[i - 1].year) {
            throw Error(ErrorKind::Input, "years must be strictly increasing (" +
                                              std::to_string(series[i - 1].year) + " then " +
                                              std::to_string(series[i].year) + ")",
                        i + 1);
        }
    }

    std::vector<EffectVector> out;
    out.reserve(series.size() - 1);
    for (std::size_t i = 1; i < series.size(); ++i) {
        const auto& from = mode == ChainMode::Annual ? series[i - 1] : series.front();
        out.push_back(decompose_additive(PeriodPair(from, series[i]), chain));
    }
    return out;
}

IndicatorRecord apply_zero_policy(IndicatorRecord record, const ZeroPolicy& policy) {
    policy.validate();
    if (policy.mode == ZeroMode::Reject) {
        std::string bad;
        for (const auto& [k, v] : record.values) {
            if (!(v > 0.0)) {
                if (!bad.empty()) bad += ", ";
                bad += k;
            }
        }
        if (!bad.empty()) {
            throw Error(ErrorKind::NonPositive, "year " + std::to_string(record.year) +
                                                    ": non-positive indicator(s) " + bad);
        }
        return record;
    }
    for (auto& [k, v] : record.values) {
        if (!(v >= policy.delta)) {
            v = policy.delta;
            record.adjusted.insert(k);
        }
    }
    return record;
}

std::vector<std::optional<double>> contribution_shares(const EffectVector& ev) {
    std::vector<std::optional<double>> out(ev.effects.size());
    if (ev.delta_c == 0.0) return out;
    for (std::size_t i = 0; i < ev.effects.size(); ++i) out[i] = 100.0 * ev.effects[i].value / ev.delta_c;
    return out;
}

}  // namespace lmdi
