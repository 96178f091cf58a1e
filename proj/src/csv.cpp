#include "tpp/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "tpp/error.hpp"

namespace tpp {

namespace {

constexpr std::array<std::string_view, 7> kHeaders{
    "x,s1,s2",
    "t,s1_probe,s2_probe,P1,P2",
    "t,x,s1,s2",
    "D,tau,verdict,first_failure_time,min_density,max_abs_density",
    "dx,dt,P1_final,P2_final,runtime_s",
    "case,species,dt_max_or_unbounded,sigma,dt_over_tau",
    "dx,dt,residual",
};

std::string format_cell(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) return format_real(*d);
    if (const std::string* s = std::get_if<std::string>(&c)) return *s;
    return {};
}

Cell parse_cell(std::string_view text) {
    if (text.empty()) return std::monostate{};
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return v;
    return std::string(text);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Cell opt(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

}  // namespace

std::string_view csv_header(CsvSchema schema) { return kHeaders[static_cast<std::size_t>(schema)]; }

std::size_t column_count(CsvSchema schema) { return split(csv_header(schema)).size(); }

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::size_t emit_csv(std::span<const StudyRow> rows, CsvSchema schema, std::ostream& sink) {
    const std::size_t cols = column_count(schema);
    std::string out;
    out.append(csv_header(schema));
    out.push_back('\n');
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].cells.size() != cols)
            throw Error("row " + std::to_string(r) + " has " + std::to_string(rows[r].cells.size()) +
                        " cells, schema expects " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            if (c) out.push_back(',');
            out += format_cell(rows[r].cells[c]);
        }
        out.push_back('\n');
    }
    sink.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!sink) throw IoError("failed to write CSV output");
    return out.size();
}

std::vector<StudyRow> parse_csv(std::istream& source, CsvSchema schema) {
    std::string line;
    if (!std::getline(source, line) || line != csv_header(schema))
        throw ParseError(1, "expected header '" + std::string(csv_header(schema)) + "'");
    const std::size_t cols = column_count(schema);
    std::vector<StudyRow> rows;
    int lineno = 1;
    while (std::getline(source, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto parts = split(line);
        if (parts.size() != cols) throw ParseError(lineno, "expected " + std::to_string(cols) + " cells");
        StudyRow row;
        row.cells.reserve(cols);
        for (const auto part : parts) row.cells.push_back(parse_cell(part));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<StudyRow> profile_rows(const RunResult& r) {
    std::vector<StudyRow> out;
    out.reserve(r.s1_final.size());
    for (std::size_t i = 0; i < r.s1_final.size(); ++i)
        out.push_back({{r.grid.x(static_cast<int>(i)), r.s1_final[i], r.s2_final[i]}});
    return out;
}

std::vector<StudyRow> timeseries_rows(const RunResult& r) {
    std::vector<StudyRow> out;
    out.reserve(r.series.size());
    for (const auto& s : r.series) out.push_back({{s.t, s.s1_probe, s.s2_probe, s.p1, s.p2}});
    return out;
}

std::vector<StudyRow> field_rows(const RunResult& r) {
    std::vector<StudyRow> out;
    for (const auto& snap : r.field)
        for (std::size_t i = 0; i < snap.s1.size(); ++i)
            out.push_back({{snap.t, r.grid.x(static_cast<int>(i)), snap.s1[i], snap.s2[i]}});
    return out;
}

std::vector<StudyRow> sweep_rows(std::span<const SweepRow> rows) {
    std::vector<StudyRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back({{r.d, r.tau, std::string(to_string(r.verdict.kind)), opt(r.verdict.first_failure_time),
                        r.verdict.min_density, r.verdict.max_abs_density}});
    return out;
}

std::vector<StudyRow> convergence_rows(std::span<const ConvergenceRow> rows) {
    std::vector<StudyRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back({{r.dx, r.dt, r.p1_final, r.p2_final, r.runtime_s}});
    return out;
}

std::vector<StudyRow> consistency_rows(std::span<const ConsistencyRow> rows) {
    std::vector<StudyRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back({{r.dx, r.dt, r.residual}});
    return out;
}

StudyRow bounds_row(std::string_view case_name, Species species, const DtBound& bound,
                    std::optional<double> sigma, std::optional<double> dt_over_tau) {
    Cell limit = bound.is_unbounded() ? Cell{std::string("unbounded")} : Cell{bound.value()};
    return {{std::string(case_name), std::string(to_string(species)), limit, opt(sigma), opt(dt_over_tau)}};
}

}  // namespace tpp
