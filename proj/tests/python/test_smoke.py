import json
import math
import os
import xml.etree.ElementTree as ET

import pytest

import lmdi

DATA = os.environ.get("LMDI_TEST_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "data"))
FIXTURE = os.path.join(DATA, "romania_2008_2022.csv")

START = {"year": 2008, "co2": 95224.62, "fossil_energy": 48166, "total_energy": 18230,
         "gdp": 539834, "population": 20635460}
END = {"year": 2022, "co2": 58638.12, "fossil_energy": 41562, "total_energy": 13289,
       "gdp": 1409783, "population": 19042455}


def test_log_mean():
    assert lmdi.log_mean(5.0, 5.0) == 5.0
    assert lmdi.log_mean(math.e, 1.0) == pytest.approx(math.e - 1.0, rel=1e-15)
    with pytest.raises(ValueError):
        lmdi.log_mean(0.0, 1.0)


def test_kaya_endpoints_match_oracle():
    with open(os.path.join(DATA, "romania_endpoints_oracle.json")) as f:
        oracle = json.load(f)
    ev = lmdi.decompose_additive(START, END)
    assert ev.delta_c == pytest.approx(-36586.5, abs=0.05)
    got = ev.as_dict()
    for key, name in zip(("dI", "dM", "dL", "dB", "dP"), ("ΔI", "ΔM", "ΔL", "ΔB", "ΔP")):
        assert got[name] == pytest.approx(oracle["effects"][key], rel=1e-9)
    ratios = lmdi.decompose_multiplicative(START, END)
    assert math.prod(ratios.values()) == pytest.approx(58638.12 / 95224.62, rel=1e-12)


def test_custom_chain_and_periods():
    chain = lmdi.FactorChain("id", "co2", [("c", "co2", None)])
    series = [{"year": 2000 + i, "co2": float(10 + i * i)} for i in range(5)]
    periods = lmdi.chain_periods(series, "annual", chain)
    assert len(periods) == 4
    assert sum(p.delta_c for p in periods) == pytest.approx(16.0)
    with pytest.raises(ValueError):
        lmdi.FactorChain("bad", "co2", [("c", "co2", "f")])


def test_fixture_report_and_svg():
    records = lmdi.load_dataset(FIXTURE)
    assert len(records) == 15
    report = json.loads(lmdi.write_report(records, mode="annual", format="json"))
    assert report["periods"][0]["delta_c"] == pytest.approx(-19828.01, abs=0.01)
    csv = lmdi.write_report(records, mode="base_year", format="csv")
    assert "\n2008-2022,-36586.50," in csv
    svg = lmdi.render_waterfall_svg(lmdi.chain_periods(records)[0])
    root = ET.fromstring(svg.encode())
    rects = [r for r in root.iter("{http://www.w3.org/2000/svg}rect") if r.get("data-name")]
    assert [r.get("data-name") for r in rects] == ["ΔI", "ΔM", "ΔL", "ΔB", "ΔP", "ΔC"]
    assert rects[-1].get("data-value") == "-19828.01"
