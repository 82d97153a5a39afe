#include "lmdi/kaya.hpp"

#include <map>

namespace lmdi::kaya {

std::string_view canonical_column(std::string_view name) {
    static const std::map<std::string_view, std::string_view> aliases{
        {"primary_energy", kFossilEnergy},
        {"fossil", kFossilEnergy},
        {"energy_consumption", kTotalEnergy},
        {"final_energy", kTotalEnergy},
        {"pop", kPopulation},
    };
    auto it = aliases.find(name);
    return it == aliases.end() ? name : it->second;
}

const FactorChain& kaya_chain() {
    static const FactorChain chain = [] {
        auto s = [](std::string_view v) { return std::string(v); };
        return FactorChain("kaya5", s(kCo2),
                           {
                               {s(kEffectNames[0]), s(kCo2), s(kFossilEnergy)},
                               {s(kEffectNames[1]), s(kFossilEnergy), s(kTotalEnergy)},
                               {s(kEffectNames[2]), s(kTotalEnergy), s(kGdp)},
                               {s(kEffectNames[3]), s(kGdp), s(kPopulation)},
                               {s(kEffectNames[4]), s(kPopulation), std::nullopt},
                           });
    }();
    return chain;
}

void check_year(int year) {
    if (year < kMinYear || year > kMaxYear) {
        throw Error(ErrorKind::Input, "year " + std::to_string(year) + " outside " +
                                          std::to_string(kMinYear) + ".." + std::to_string(kMaxYear));
    }
}

IndicatorRecord make_record(int year, double co2, double fossil_energy, double total_energy, double gdp,
                            double population) {
    check_year(year);
    IndicatorRecord r;
    r.year = year;
    r.values = {{std::string(kCo2), co2},
                {std::string(kFossilEnergy), fossil_energy},
                {std::string(kTotalEnergy), total_energy},
                {std::string(kGdp), gdp},
                {std::string(kPopulation), population}};
    return r;
}

KayaEffects kaya_decompose(const PeriodPair& pair) {
    const auto ev = decompose_additive(pair, kaya_chain());
    return {
        .carbon_intensity = ev.effects[0].value,
        .energy_mix = ev.effects[1].value,
        .generating_efficiency = ev.effects[2].value,
        .economy = ev.effects[3].value,
        .population_effect = ev.effects[4].value,
        .delta_c = ev.delta_c,
    };
}

}  // namespace lmdi::kaya
