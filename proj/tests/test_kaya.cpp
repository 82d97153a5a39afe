#include <random>

#include "doctest.h"
#include "lmdi/kaya.hpp"
#include "test_support.hpp"

using namespace lmdi;
using namespace lmdi::kaya;
using lmdi::testing::LogUniform;
using lmdi::testing::rel_close;

namespace {

PeriodPair romania_endpoints() {
    return PeriodPair(make_record(2008, 95224.62, 48166, 18230, 539834, 20635460),
                      make_record(2022, 58638.12, 41562, 13289, 1409783, 19042455));
}

}  // namespace

TEST_CASE("kaya chain shape") {
    const auto& chain = kaya_chain();
    CHECK(chain.size() == 5);
    CHECK(chain.aggregate() == "co2");
    CHECK_FALSE(telescoping_violation(chain.aggregate(), chain.factors()));
    const std::vector<std::string> names{"ΔI", "ΔM", "ΔL", "ΔB", "ΔP"};
    for (std::size_t i = 0; i < 5; ++i) CHECK(chain.factors()[i].name == names[i]);
    CHECK(chain.factors()[0].numerator == "co2");
    CHECK(*chain.factors()[0].denominator == "fossil_energy");
    CHECK_FALSE(chain.factors()[4].denominator.has_value());
}

TEST_CASE("kaya_decompose on identical endpoints") {
    const auto a = make_record(2010, 1, 2, 3, 4, 5);
    auto b = a;
    b.year = 2011;
    CHECK(kaya_decompose(PeriodPair(a, b)) == KayaEffects{});
}

TEST_CASE("kaya_decompose matches the high-precision oracle on the Romania endpoints") {
    const auto oracle = lmdi::testing::load_oracle();
    const auto k = kaya_decompose(romania_endpoints());
    const auto& e = oracle["effects"];
    CHECK(rel_close(k.carbon_intensity, e["dI"].get<double>(), 1e-9));
    CHECK(rel_close(k.energy_mix, e["dM"].get<double>(), 1e-9));
    CHECK(rel_close(k.generating_efficiency, e["dL"].get<double>(), 1e-9));
    CHECK(rel_close(k.economy, e["dB"].get<double>(), 1e-9));
    CHECK(rel_close(k.population_effect, e["dP"].get<double>(), 1e-9));
    CHECK(k.delta_c == doctest::Approx(-36586.5).epsilon(1e-12));
    CHECK(rel_close(k.sum(), -36586.5, 1e-9));
}

TEST_CASE("population-only change: economy effect mirrors population effect") {
    const auto a = make_record(2008, 95224.62, 48166, 18230, 539834, 20635460);
    const auto b = make_record(2022, 58638.12, 48166, 18230, 539834, 19042455);
    const auto k = kaya_decompose(PeriodPair(a, b));
    const double weight = log_mean(58638.12, 95224.62);
    CHECK(rel_close(k.population_effect, weight * std::log(19042455.0 / 20635460.0), 1e-12));
    CHECK(k.economy == -k.population_effect);
    CHECK(rel_close(k.population_effect, -6062.365392366118, 1e-9));
    CHECK(k.energy_mix == 0.0);
    CHECK(k.generating_efficiency == 0.0);
    CHECK(rel_close(k.sum(), -36586.5, 1e-9));
}

TEST_CASE("kaya_decompose equals generic decomposition with the kaya chain") {
    std::mt19937_64 rng(21);
    LogUniform dist(1.0, 1e9);
    for (int i = 0; i < 300; ++i) {
        const PeriodPair pair(make_record(2000, dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)),
                              make_record(2001, dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)));
        const auto k = kaya_decompose(pair);
        const auto ev = decompose_additive(pair, kaya_chain());
        CHECK(k.carbon_intensity == ev["ΔI"].value);
        CHECK(k.energy_mix == ev["ΔM"].value);
        CHECK(k.generating_efficiency == ev["ΔL"].value);
        CHECK(k.economy == ev["ΔB"].value);
        CHECK(k.population_effect == ev["ΔP"].value);
        CHECK(k.delta_c == ev.delta_c);
    }
}

TEST_CASE("year range and column aliases") {
    CHECK_THROWS_AS(make_record(1899, 1, 1, 1, 1, 1), Error);
    CHECK_THROWS_AS(make_record(2101, 1, 1, 1, 1, 1), Error);
    CHECK(canonical_column("primary_energy") == "fossil_energy");
    CHECK(canonical_column("energy_consumption") == "total_energy");
    CHECK(canonical_column("gdp") == "gdp");
}
