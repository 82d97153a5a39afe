#pragma once

// Five-factor Kaya identity for CO2 emissions:
//   C = C/F * F/E * E/G * G/P * P
// C co2 (Gg), F fossil / primary energy (ktoe), E energy consumption (ktoe),
// G GDP (any currency unit), P population (persons).

#include <array>
#include <string_view>

#include "lmdi/core.hpp"

namespace lmdi::kaya {

inline constexpr std::string_view kCo2 = "co2";
inline constexpr std::string_view kFossilEnergy = "fossil_energy";
inline constexpr std::string_view kTotalEnergy = "total_energy";
inline constexpr std::string_view kGdp = "gdp";
inline constexpr std::string_view kPopulation = "population";

inline constexpr std::array<std::string_view, 5> kColumns{kCo2, kFossilEnergy, kTotalEnergy, kGdp,
                                                          kPopulation};

inline constexpr int kMinYear = 1900;
inline constexpr int kMaxYear = 2100;

/// Effect names in chain order.
inline constexpr std::array<std::string_view, 5> kEffectNames{"ΔI", "ΔM", "ΔL", "ΔB", "ΔP"};

/// Alternative column spellings accepted on input.
std::string_view canonical_column(std::string_view name);

const FactorChain& kaya_chain();

IndicatorRecord make_record(int year, double co2, double fossil_energy, double total_energy, double gdp,
                            double population);

/// Throws Error(Input) when the year is outside [kMinYear, kMaxYear].
void check_year(int year);

struct KayaEffects {
    double carbon_intensity = 0.0;       // ΔI, C/F
    double energy_mix = 0.0;             // ΔM, F/E
    double generating_efficiency = 0.0;  // ΔL, E/G
    double economy = 0.0;                // ΔB, G/P
    double population_effect = 0.0;      // ΔP, P
    double delta_c = 0.0;

    double sum() const {
        return carbon_intensity + energy_mix + generating_efficiency + economy + population_effect;
    }

    friend bool operator==(const KayaEffects&, const KayaEffects&) = default;
};

KayaEffects kaya_decompose(const PeriodPair& pair);

}  // namespace lmdi::kaya
