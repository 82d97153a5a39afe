#pragma once

#include <filesystem>
#include <iosfwd>

#include "lmdi/core.hpp"

namespace lmdi {

// Declarative factor-chain file:
//
//   # comment
//   name = energy-intensity
//   aggregate = co2
//   factor ΔI = co2 / fossil_energy
//   factor ΔP = population
//
// Factors are listed in chain order. Malformed lines and non-telescoping
// chains raise Error(Config) with the line number.
FactorChain parse_chain_spec(std::istream& in);
FactorChain load_chain_spec(const std::filesystem::path& path);

}  // namespace lmdi
