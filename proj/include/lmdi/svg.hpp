#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lmdi/core.hpp"

namespace lmdi {

/// Waterfall chart: one floating bar per effect in chain order, each starting
/// where the previous one ended, then a total bar from zero to delta_c.
/// Output depends only on the arguments (fixed canvas, fixed number format).
std::string render_waterfall_svg(const EffectVector& ev, std::string_view title = {});

/// Renders and writes atomically; returns the bytes written.
std::string write_waterfall_svg(const EffectVector& ev, const std::filesystem::path& path,
                                std::string_view title = {});

}  // namespace lmdi
