#pragma once

// Chain-agnostic additive / multiplicative LMDI decomposition.
//
// An aggregate V is written as a telescoping product of factor ratios,
//   V = x_1 * x_2 * ... * x_n,   x_i = num_i / den_i  (or a bare level num_i),
// and its change between two years is split as
//   V_t - V_0 = sum_i L(V_t, V_0) * ln(x_i,t / x_i,0)
// with L the logarithmic mean. The split has no residual term.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lmdi/error.hpp"

namespace lmdi {

/// One year's raw observations, keyed by indicator name.
struct IndicatorRecord {
    int year = 0;
    std::map<std::string, double> values;
    /// Keys replaced by the zero policy.
    std::set<std::string> adjusted;
    std::string provenance;

    bool is_adjusted() const { return !adjusted.empty(); }
    double at(const std::string& key) const;

    friend bool operator==(const IndicatorRecord&, const IndicatorRecord&) = default;
};

struct FactorDef {
    std::string name;
    std::string numerator;
    std::optional<std::string> denominator;  // nullopt: bare level

    friend bool operator==(const FactorDef&, const FactorDef&) = default;
};

class FactorChain {
public:
    /// Throws Error(Config) unless the factors telescope to `aggregate`.
    FactorChain(std::string name, std::string aggregate, std::vector<FactorDef> factors);

    const std::string& name() const noexcept { return name_; }
    const std::string& aggregate() const noexcept { return aggregate_; }
    const std::vector<FactorDef>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    /// Every indicator key referenced by the chain, aggregate first.
    std::vector<std::string> keys() const;

    friend bool operator==(const FactorChain&, const FactorChain&) = default;

private:
    std::string name_;
    std::string aggregate_;
    std::vector<FactorDef> factors_;
};

/// Symbolic telescoping check: the aggregate appears once, as a numerator
/// only; every other key appears exactly once as numerator and once as
/// denominator. Returns a description of the first violation, or nullopt.
std::optional<std::string> telescoping_violation(const std::string& aggregate,
                                                 std::span<const FactorDef> factors);

struct PeriodPair {
    PeriodPair(IndicatorRecord start, IndicatorRecord end);

    int start_year() const noexcept { return start.year; }
    int end_year() const noexcept { return end.year; }

    IndicatorRecord start;
    IndicatorRecord end;
};

struct Effect {
    std::string name;
    double value = 0.0;
    /// Percent of delta_c; nullopt when delta_c == 0.
    std::optional<double> share;
    /// The factor touches an indicator substituted by the zero policy.
    bool degenerate = false;

    friend bool operator==(const Effect&, const Effect&) = default;
};

struct EffectVector {
    int start_year = 0;
    int end_year = 0;
    double delta_c = 0.0;
    double weight = 0.0;  // L(V_t, V_0)
    std::vector<Effect> effects;

    double sum() const;
    const Effect& operator[](std::string_view name) const;

    friend bool operator==(const EffectVector&, const EffectVector&) = default;
};

enum class ZeroMode { Reject, Substitute };

struct ZeroPolicy {
    static constexpr double kDefaultDelta = 1e-20;

    ZeroMode mode = ZeroMode::Reject;
    double delta = kDefaultDelta;

    /// Throws Error(Config) unless 0 < delta < 1e-6.
    void validate() const;

    static ZeroPolicy reject() { return {ZeroMode::Reject, kDefaultDelta}; }
    static ZeroPolicy substitute(double delta = kDefaultDelta) { return {ZeroMode::Substitute, delta}; }

    friend bool operator==(const ZeroPolicy&, const ZeroPolicy&) = default;
};

enum class ChainMode { Annual, BaseYear };

const char* to_string(ChainMode mode);
const char* to_string(ZeroMode mode);

/// Logarithmic mean L(a, b) = (a - b) / (ln a - ln b), with L(a, a) = a.
double log_mean(double a, double b);

/// Relative closeness below which log_mean returns its first argument.
inline constexpr double kLogMeanCloseness = 1e-12;

EffectVector decompose_additive(const PeriodPair& pair, const FactorChain& chain);

struct MultiplicativeEffect {
    std::string name;
    double ratio = 1.0;

    friend bool operator==(const MultiplicativeEffect&, const MultiplicativeEffect&) = default;
};

/// D_i = x_i,t / x_i,0 per factor, in chain order.
std::vector<MultiplicativeEffect> decompose_multiplicative(const PeriodPair& pair, const FactorChain& chain);

/// Annual: one result per consecutive pair. BaseYear: every later year
/// against the first. Records must have strictly increasing years.
std::vector<EffectVector> chain_periods(std::span<const IndicatorRecord> series,
                                        const FactorChain& chain, ChainMode mode);

IndicatorRecord apply_zero_policy(IndicatorRecord record, const ZeroPolicy& policy);

/// 100 * effect / delta_c per effect, nullopt throughout when delta_c == 0.
std::vector<std::optional<double>> contribution_shares(const EffectVector& ev);

enum class EffectSign { Expanding, Restraining, Neutral };

EffectSign classify(double effect);
const char* to_string(EffectSign sign);

}  // namespace lmdi
