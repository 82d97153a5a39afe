#include "lmdi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "lmdi/dataset.hpp"
#include "lmdi/report.hpp"

namespace lmdi {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 420;
constexpr double kLeft = 80;
constexpr double kRight = 20;
constexpr double kTop = 50;
constexpr double kBottom = 60;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    return s == "-0.00" ? "0.00" : s;
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

const char* fill_for(EffectSign s) {
    switch (s) {
        case EffectSign::Expanding: return "#c0392b";
        case EffectSign::Restraining: return "#2e86c1";
        case EffectSign::Neutral: return "#7f8c8d";
    }
    return "#7f8c8d";
}

struct Bar {
    std::string name;
    double value;
    double from;
    double to;
    const char* fill;
    const char* kind;
};

}  // namespace

std::string render_waterfall_svg(const EffectVector& ev, std::string_view title) {
    std::vector<Bar> bars;
    double cum = 0.0;
    double lo = 0.0, hi = 0.0;
    for (const auto& e : ev.effects) {
        const double next = cum + e.value;
        bars.push_back({e.name, e.value, cum, next, fill_for(classify(e.value)), "effect"});
        cum = next;
        lo = std::min({lo, cum});
        hi = std::max({hi, cum});
    }
    bars.push_back({"ΔC", ev.delta_c, 0.0, ev.delta_c, "#34495e", "total"});
    lo = std::min(lo, ev.delta_c);
    hi = std::max(hi, ev.delta_c);
    const double span = hi > lo ? hi - lo : 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double slot = plot_w / static_cast<double>(bars.size());
    const double bar_w = slot * 0.6;
    auto y_of = [&](double v) { return kTop + (hi - v) / span * plot_h; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"#ffffff\"/>\n";
    const std::string heading = title.empty() ? "Decomposition " + period_label(ev) : std::string(title);
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"28.00\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" + escape(heading) + "</text>\n";
    out += "<line class=\"baseline\" x1=\"" + num(kLeft) + "\" y1=\"" + num(y_of(0.0)) + "\" x2=\"" +
           num(kWidth - kRight) + "\" y2=\"" + num(y_of(0.0)) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    for (std::size_t i = 0; i < bars.size(); ++i) {
        const auto& b = bars[i];
        const double x = kLeft + slot * static_cast<double>(i) + (slot - bar_w) / 2;
        const double y0 = y_of(b.from);
        const double y1 = y_of(b.to);
        const double top = std::min(y0, y1);
        out += "<rect class=\"" + std::string(b.kind) + "\" data-name=\"" + escape(b.name) + "\" data-value=\"" +
               num(b.value) + "\" data-start=\"" + num(b.from) + "\" data-end=\"" + num(b.to) + "\" x=\"" + num(x) +
               "\" y=\"" + num(top) + "\" width=\"" + num(bar_w) + "\" height=\"" + num(std::abs(y1 - y0)) +
               "\" fill=\"" + b.fill + "\"/>\n";
        if (i + 1 < bars.size() - 1) {
            out += "<line class=\"connector\" x1=\"" + num(x + bar_w) + "\" y1=\"" + num(y1) + "\" x2=\"" +
                   num(x + slot) + "\" y2=\"" + num(y1) + "\" stroke=\"#555555\" stroke-dasharray=\"3,2\"/>\n";
        }
        out += "<text x=\"" + num(x + bar_w / 2) + "\" y=\"" + num(kHeight - kBottom + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + escape(b.name) + "</text>\n";
        out += "<text x=\"" + num(x + bar_w / 2) + "\" y=\"" + num(top - 4) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" + format_fixed2(b.value) +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string write_waterfall_svg(const EffectVector& ev, const std::filesystem::path& path, std::string_view title) {
    auto svg = render_waterfall_svg(ev, title);
    write_file_atomic(path, svg);
    return svg;
}

}  // namespace lmdi
