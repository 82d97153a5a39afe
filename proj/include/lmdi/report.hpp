#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lmdi/core.hpp"

namespace lmdi {

struct Adjustment {
    int year = 0;
    std::vector<std::string> keys;

    friend bool operator==(const Adjustment&, const Adjustment&) = default;
};

/// Ordered per-period decomposition plus the cumulative first-to-last pair.
/// The cumulative row is an endpoint decomposition, not a sum of the periods.
struct DecompositionReport {
    FactorChain chain;
    ChainMode mode = ChainMode::Annual;
    ZeroPolicy zero_policy;
    std::vector<Adjustment> adjustments;
    std::vector<EffectVector> periods;
    EffectVector cumulative;

    friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

DecompositionReport build_report(std::span<const IndicatorRecord> series, const FactorChain& chain, ChainMode mode,
                                 const ZeroPolicy& policy);

enum class ReportFormat { Csv, Json };

/// "csv" or "json"; anything else is Error(Format).
ReportFormat parse_format(std::string_view token);

/// CSV mirrors the published table: a value row per period followed by a
/// bracketed share row, values and shares with 2 decimals, "n/a" for shares
/// of a zero change. JSON carries full-precision numbers.
std::string write_report(const DecompositionReport& report, ReportFormat format);

DecompositionReport parse_report_json(std::string_view json);

std::string period_label(const EffectVector& ev);

/// printf("%.2f") with negative zero folded to "0.00".
std::string format_fixed2(double v);

}  // namespace lmdi
