#include "lmdi/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "lmdi/kaya.hpp"

namespace lmdi {

namespace {

constexpr std::string_view kYear = "year";
constexpr std::string_view kProvenance = "provenance";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        cells.push_back(trim(line.substr(pos, comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return cells;
}

std::string cell_error(std::size_t row, std::string_view column, std::string_view what) {
    std::ostringstream os;
    os << "row " << row << ", column " << column << ": " << what;
    return os.str();
}

}  // namespace

LoadOptions LoadOptions::kaya(ZeroPolicy policy) {
    LoadOptions o;
    for (auto c : kaya::kColumns) o.required_columns.emplace_back(c);
    o.zero_policy = policy;
    return o;
}

LoadOptions LoadOptions::for_chain(const FactorChain& chain, ZeroPolicy policy) {
    LoadOptions o;
    o.required_columns = chain.keys();
    o.zero_policy = policy;
    return o;
}

std::vector<IndicatorRecord> load_dataset(std::istream& in, const LoadOptions& options) {
    options.zero_policy.validate();

    std::string line;
    std::vector<std::string> header;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::string_view v = line;
        if (v.starts_with("\xEF\xBB\xBF")) v.remove_prefix(3);
        if (trim(v).empty()) continue;
        for (auto cell : split(v)) header.emplace_back(kaya::canonical_column(cell));
        have_header = true;
        break;
    }
    if (!have_header) throw Error(ErrorKind::Input, "no data rows (input is empty)");

    std::set<std::string> seen;
    for (const auto& h : header) {
        if (h.empty()) throw Error(ErrorKind::Input, "header has an empty column name");
        if (!seen.insert(h).second) throw Error(ErrorKind::Input, "duplicate column '" + h + "'", 0, h);
    }
    auto column_index = [&](std::string_view name) -> std::ptrdiff_t {
        auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : it - header.begin();
    };
    if (column_index(kYear) < 0) throw Error(ErrorKind::MissingColumn, "missing column \"year\"", 0, "year");
    for (const auto& c : options.required_columns) {
        if (column_index(c) < 0) throw Error(ErrorKind::MissingColumn, "missing column \"" + c + "\"", 0, c);
    }

    std::vector<IndicatorRecord> records;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        const auto cells = split(line);
        if (cells.size() != header.size()) {
            std::ostringstream os;
            os << "row " << row << ": expected " << header.size() << " cells, found " << cells.size();
            throw Error(ErrorKind::Input, os.str(), row);
        }
        IndicatorRecord rec;
        for (std::size_t c = 0; c < header.size(); ++c) {
            const auto& name = header[c];
            const auto cell = cells[c];
            if (name == kProvenance) {
                rec.provenance = std::string(cell);
                continue;
            }
            if (name == kYear) {
                int year = 0;
                auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), year);
                if (ec != std::errc{} || p != cell.data() + cell.size()) {
                    throw Error(ErrorKind::NonNumeric,
                                cell_error(row, name, "year '" + std::string(cell) + "' is not an integer"), row,
                                name);
                }
                if (year < kaya::kMinYear || year > kaya::kMaxYear) {
                    throw Error(ErrorKind::Input, cell_error(row, name, "year " + std::to_string(year) + " out of range"),
                                row, name);
                }
                rec.year = year;
                continue;
            }
            double v = 0.0;
            auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || ec != std::errc{} || p != cell.data() + cell.size() || !std::isfinite(v)) {
                throw Error(ErrorKind::NonNumeric,
                            cell_error(row, name, "'" + std::string(cell) + "' is not a finite number"), row, name);
            }
            rec.values[name] = v;
        }
        if (!records.empty() && rec.year <= records.back().year) {
            if (rec.year == records.back().year) {
                throw Error(ErrorKind::DuplicateYear, cell_error(row, kYear, "duplicate year " + std::to_string(rec.year)),
                            row, std::string(kYear));
            }
            throw Error(ErrorKind::Input, cell_error(row, kYear, "years must be strictly increasing"), row,
                        std::string(kYear));
        }
        if (options.zero_policy.mode == ZeroMode::Reject) {
            for (const auto& [k, v] : rec.values) {
                if (v <= 0.0) {
                    throw Error(ErrorKind::NonPositive, cell_error(row, k, "non-positive value " + format_shortest(v)),
                                row, k);
                }
            }
        } else {
            rec = apply_zero_policy(std::move(rec), options.zero_policy);
        }
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw Error(ErrorKind::Input, "no data rows");
    return records;
}

std::vector<IndicatorRecord> load_dataset(const std::filesystem::path& path, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
    return load_dataset(in, options);
}

std::string format_shortest(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

std::string write_dataset(std::span<const IndicatorRecord> records) {
    std::vector<std::string> columns;
    for (auto c : kaya::kColumns) {
        if (std::any_of(records.begin(), records.end(), [&](const auto& r) { return r.values.contains(std::string(c)); })) {
            columns.emplace_back(c);
        }
    }
    std::set<std::string> extra;
    for (const auto& r : records) {
        for (const auto& [k, _] : r.values) {
            if (std::find(columns.begin(), columns.end(), k) == columns.end()) extra.insert(k);
        }
    }
    columns.insert(columns.end(), extra.begin(), extra.end());
    const bool provenance =
        std::any_of(records.begin(), records.end(), [](const auto& r) { return !r.provenance.empty(); });

    std::string out = "year";
    for (const auto& c : columns) out += "," + c;
    if (provenance) out += ",provenance";
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.year);
        for (const auto& c : columns) out += "," + format_shortest(r.at(c));
        if (provenance) out += "," + r.provenance;
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot open '" + tmp.string() + "' for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw Error(ErrorKind::Io, "write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorKind::Io, "cannot move output into '" + path.string() + "'");
    }
}

}  // namespace lmdi
