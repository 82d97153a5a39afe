#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lmdi/core.hpp"
#include "lmdi/dataset.hpp"
#include "lmdi/kaya.hpp"
#include "lmdi/report.hpp"
#include "lmdi/svg.hpp"

namespace py = pybind11;
using namespace lmdi;

namespace {

// {"year": 2008, "co2": 95224.62, ...} -> IndicatorRecord
IndicatorRecord record_from_dict(const py::dict& d) {
    IndicatorRecord r;
    for (auto [k, v] : d) {
        auto key = py::cast<std::string>(k);
        if (key == "year") r.year = py::cast<int>(v);
        else if (key == "provenance") r.provenance = py::cast<std::string>(v);
        else r.values[key] = py::cast<double>(v);
    }
    return r;
}

py::dict record_to_dict(const IndicatorRecord& r) {
    py::dict d;
    d["year"] = r.year;
    for (const auto& [k, v] : r.values) d[py::str(k)] = v;
    if (!r.provenance.empty()) d["provenance"] = r.provenance;
    if (r.is_adjusted()) d["adjusted"] = std::vector<std::string>(r.adjusted.begin(), r.adjusted.end());
    return d;
}

std::vector<IndicatorRecord> records_from_list(const py::list& l) {
    std::vector<IndicatorRecord> out;
    for (auto item : l) out.push_back(record_from_dict(py::cast<py::dict>(item)));
    return out;
}

ChainMode parse_mode(const std::string& m) {
    if (m == "annual") return ChainMode::Annual;
    if (m == "base_year") return ChainMode::BaseYear;
    throw Error(ErrorKind::Config, "mode must be 'annual' or 'base_year', got '" + m + "'");
}

ZeroPolicy make_policy(const std::string& mode, double delta) {
    if (mode == "reject") return {ZeroMode::Reject, delta};
    if (mode == "substitute") return {ZeroMode::Substitute, delta};
    throw Error(ErrorKind::Config, "policy must be 'reject' or 'substitute', got '" + mode + "'");
}

const FactorChain& chain_or_kaya(const FactorChain* chain) { return chain ? *chain : kaya::kaya_chain(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Additive and multiplicative LMDI decomposition";

    py::register_exception<Error>(m, "LmdiError", PyExc_ValueError);

    py::class_<FactorDef>(m, "FactorDef")
        .def_readonly("name", &FactorDef::name)
        .def_readonly("numerator", &FactorDef::numerator)
        .def_readonly("denominator", &FactorDef::denominator);

    py::class_<FactorChain>(m, "FactorChain")
        .def(py::init([](std::string name, std::string aggregate,
                         const std::vector<std::tuple<std::string, std::string, std::optional<std::string>>>& defs) {
                 std::vector<FactorDef> factors;
                 for (const auto& [n, num, den] : defs) factors.push_back({n, num, den});
                 return FactorChain(std::move(name), std::move(aggregate), std::move(factors));
             }),
             py::arg("name"), py::arg("aggregate"), py::arg("factors"))
        .def_property_readonly("name", &FactorChain::name)
        .def_property_readonly("aggregate", &FactorChain::aggregate)
        .def_property_readonly("factors", &FactorChain::factors)
        .def("__len__", &FactorChain::size);

    py::class_<Effect>(m, "Effect")
        .def_readonly("name", &Effect::name)
        .def_readonly("value", &Effect::value)
        .def_readonly("share", &Effect::share)
        .def_readonly("degenerate", &Effect::degenerate);

    py::class_<EffectVector>(m, "EffectVector")
        .def_readonly("start_year", &EffectVector::start_year)
        .def_readonly("end_year", &EffectVector::end_year)
        .def_readonly("delta_c", &EffectVector::delta_c)
        .def_readonly("weight", &EffectVector::weight)
        .def_readonly("effects", &EffectVector::effects)
        .def("sum", &EffectVector::sum)
        .def("as_dict", [](const EffectVector& ev) {
            py::dict d;
            for (const auto& e : ev.effects) d[py::str(e.name)] = e.value;
            return d;
        });

    m.def("log_mean", &log_mean, py::arg("a"), py::arg("b"));
    m.def("kaya_chain", [] { return kaya::kaya_chain(); });

    m.def(
        "decompose_additive",
        [](const py::dict& start, const py::dict& end, const FactorChain* chain) {
            return decompose_additive(PeriodPair(record_from_dict(start), record_from_dict(end)), chain_or_kaya(chain));
        },
        py::arg("start"), py::arg("end"), py::arg("chain") = nullptr);

    m.def(
        "decompose_multiplicative",
        [](const py::dict& start, const py::dict& end, const FactorChain* chain) {
            py::dict out;
            for (const auto& e : decompose_multiplicative(PeriodPair(record_from_dict(start), record_from_dict(end)),
                                                          chain_or_kaya(chain))) {
                out[py::str(e.name)] = e.ratio;
            }
            return out;
        },
        py::arg("start"), py::arg("end"), py::arg("chain") = nullptr);

    m.def(
        "chain_periods",
        [](const py::list& series, const std::string& mode, const FactorChain* chain) {
            const auto records = records_from_list(series);
            return chain_periods(records, chain_or_kaya(chain), parse_mode(mode));
        },
        py::arg("series"), py::arg("mode") = "annual", py::arg("chain") = nullptr);

    m.def(
        "load_dataset",
        [](const std::filesystem::path& path, const std::string& policy, double delta) {
            py::list out;
            for (const auto& r : load_dataset(path, LoadOptions::kaya(make_policy(policy, delta)))) {
                out.append(record_to_dict(r));
            }
            return out;
        },
        py::arg("path"), py::arg("policy") = "reject", py::arg("delta") = ZeroPolicy::kDefaultDelta);

    m.def(
        "write_report",
        [](const py::list& series, const std::string& mode, const std::string& format, const std::string& policy,
           double delta, const FactorChain* chain) {
            const auto zp = make_policy(policy, delta);
            std::vector<IndicatorRecord> records;
            for (auto& r : records_from_list(series)) records.push_back(apply_zero_policy(std::move(r), zp));
            return write_report(build_report(records, chain_or_kaya(chain), parse_mode(mode), zp), parse_format(format));
        },
        py::arg("series"), py::arg("mode") = "annual", py::arg("format") = "json", py::arg("policy") = "reject",
        py::arg("delta") = ZeroPolicy::kDefaultDelta, py::arg("chain") = nullptr);

    m.def("render_waterfall_svg", &render_waterfall_svg, py::arg("effects"), py::arg("title") = "");
}
