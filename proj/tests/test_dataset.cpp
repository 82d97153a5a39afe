#include <random>
#include <sstream>

#include "doctest.h"
#include "lmdi/dataset.hpp"
#include "lmdi/kaya.hpp"
#include "test_support.hpp"

using namespace lmdi;

namespace {

ErrorKind kind_of(const std::string& csv, const LoadOptions& opts = LoadOptions::kaya()) {
    std::istringstream in(csv);
    try {
        load_dataset(in, opts);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected load_dataset to throw");
    return ErrorKind::Io;
}

const char* kHeader = "year,co2,fossil_energy,total_energy,gdp,population\n";

}  // namespace

TEST_CASE("loads the shipped Romania fixture") {
    const auto records = load_dataset(lmdi::testing::data_path("romania_2008_2022.csv"));
    REQUIRE(records.size() == 15);
    CHECK(records.front().year == 2008);
    CHECK(records.back().year == 2022);
    CHECK(records.front().at("co2") == 95224.62);
    CHECK(records[1].at("co2") == 75396.61);
    CHECK(records.back().at("co2") == 58638.12);
    CHECK(records.front().provenance == "published-endpoint");
    for (const auto& r : records) CHECK_FALSE(r.is_adjusted());
}

TEST_CASE("schema and input errors are distinct kinds") {
    CHECK(kind_of("") == ErrorKind::Input);
    CHECK(kind_of(kHeader) == ErrorKind::Input);
    CHECK(kind_of("year,co2,fossil_energy,total_energy,gdp\n2008,1,1,1,1\n") == ErrorKind::MissingColumn);
    CHECK(kind_of(std::string(kHeader) + "2008,1,1,1,abc,1\n") == ErrorKind::NonNumeric);
    CHECK(kind_of(std::string(kHeader) + "2008,1,1,1,1,1\n2008,1,1,1,1,1\n") == ErrorKind::DuplicateYear);
    CHECK(kind_of(std::string(kHeader) + "2008,1,0,1,1,1\n") == ErrorKind::NonPositive);
    CHECK(kind_of(std::string(kHeader) + "2008,1,1,1,1,nan\n") == ErrorKind::NonNumeric);
    CHECK(kind_of(std::string(kHeader) + "2009,1,1,1,1,1\n2008,1,1,1,1,1\n") == ErrorKind::Input);
}

TEST_CASE("diagnostics carry row and column") {
    std::istringstream in(std::string(kHeader) + "2008,1,1,1,1,1\n2009,1,1,1,1,1\n2010,1,1,1,x,1\n");
    try {
        load_dataset(in);
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.row() == 3u);
        CHECK(e.column() == "gdp");
        CHECK(std::string(e.what()).find("row 3, column gdp") != std::string::npos);
    }
    std::istringstream missing("year,co2,fossil_energy,total_energy,gdp\n2008,1,1,1,1\n");
    CHECK_THROWS_WITH(load_dataset(missing), doctest::Contains("population"));
    std::istringstream empty("");
    CHECK_THROWS_WITH(load_dataset(empty), doctest::Contains("no data rows"));
}

TEST_CASE("substitute policy flags adjusted cells") {
    std::istringstream in(std::string(kHeader) + "2008,1,0,1,1,1\n2009,2,1,1,1,1\n");
    const auto records = load_dataset(in, LoadOptions::kaya(ZeroPolicy::substitute(1e-12)));
    CHECK(records[0].at("fossil_energy") == 1e-12);
    CHECK(records[0].adjusted == std::set<std::string>{"fossil_energy"});
    CHECK_FALSE(records[1].is_adjusted());
}

TEST_CASE("aliases, CRLF, extra columns and custom required sets") {
    std::istringstream in(
        "year,co2,primary_energy,energy_consumption,gdp,pop,extra\r\n2008,1,2,3,4,5,6\r\n2009,1,2,3,4,5,7\r\n");
    const auto r = load_dataset(in);
    CHECK(r[0].at("fossil_energy") == 2);
    CHECK(r[0].at("total_energy") == 3);
    CHECK(r[1].at("extra") == 7);

    LoadOptions custom;
    custom.required_columns = {"v"};
    std::istringstream small("year,v\n2000,1.5\n2001,2\n");
    CHECK(load_dataset(small, custom).size() == 2);
}

TEST_CASE("missing file is an I/O error") {
    try {
        load_dataset(std::filesystem::path("/nonexistent/dir/data.csv"));
        FAIL("expected failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
    }
}

TEST_CASE("write_dataset round-trips random records exactly") {
    std::mt19937_64 rng(17);
    lmdi::testing::LogUniform dist(1e-6, 1e12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<IndicatorRecord> records;
        for (int y = 1990; y < 2000; ++y) {
            auto r = kaya::make_record(y, dist(rng), dist(rng), dist(rng), dist(rng), dist(rng));
            r.provenance = trial % 2 ? "synthetic" : "";
            records.push_back(std::move(r));
        }
        std::istringstream in(write_dataset(records));
        CHECK(load_dataset(in) == records);
    }
}
