#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lmdi/core.hpp"

namespace lmdi {

struct LoadOptions {
    /// Columns that must be present besides `year`. Defaults to the Kaya five.
    std::vector<std::string> required_columns;
    ZeroPolicy zero_policy = ZeroPolicy::reject();

    static LoadOptions kaya(ZeroPolicy policy = ZeroPolicy::reject());
    static LoadOptions for_chain(const FactorChain& chain, ZeroPolicy policy = ZeroPolicy::reject());
};

/// Parses a dataset CSV: comma separated, '.' decimal point, header row
/// required, one row per year with strictly increasing years. A `provenance`
/// column, when present, is kept as free text; every other column is numeric.
/// Rows are numbered from 1 (first data row) in error messages.
std::vector<IndicatorRecord> load_dataset(std::istream& in, const LoadOptions& options = LoadOptions::kaya());
std::vector<IndicatorRecord> load_dataset(const std::filesystem::path& path,
                                          const LoadOptions& options = LoadOptions::kaya());

/// Writes records in the same dialect with shortest round-trip decimals.
std::string write_dataset(std::span<const IndicatorRecord> records);

/// Shortest decimal representation that parses back to the same double.
std::string format_shortest(double v);

/// Writes `bytes` to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace lmdi
