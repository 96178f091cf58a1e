#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tpp/consistency.hpp"
#include "tpp/convergence.hpp"
#include "tpp/solver.hpp"
#include "tpp/stability.hpp"
#include "tpp/sweep.hpp"

namespace tpp {

/// Output tables. Headers are fixed:
///   Profile      x,s1,s2
///   Timeseries   t,s1_probe,s2_probe,P1,P2
///   Field        t,x,s1,s2
///   Sweep        D,tau,verdict,first_failure_time,min_density,max_abs_density
///   Convergence  dx,dt,P1_final,P2_final,runtime_s
///   Bounds       case,species,dt_max_or_unbounded,sigma,dt_over_tau
///   Consistency  dx,dt,residual
enum class CsvSchema { Profile, Timeseries, Field, Sweep, Convergence, Bounds, Consistency };

std::string_view csv_header(CsvSchema schema);
std::size_t column_count(CsvSchema schema);

/// Empty cell, real, or text.
using Cell = std::variant<std::monostate, double, std::string>;

struct StudyRow {
    std::vector<Cell> cells;

    friend bool operator==(const StudyRow&, const StudyRow&) = default;
};

/// Nine significant digits, shortest of fixed/scientific ("%.9g"); non-finite
/// values print as nan, inf, -inf.
std::string format_real(double v);

/// Writes the header and one LF-terminated line per row. Returns the number
/// of bytes written. Throws Error on a cell-count mismatch and IoError when
/// the sink fails.
std::size_t emit_csv(std::span<const StudyRow> rows, CsvSchema schema, std::ostream& sink);

/// Reads a table written by emit_csv. Cells that parse completely as a real
/// become doubles, empty cells monostate, anything else text. Throws
/// ParseError on a header or cell-count mismatch.
std::vector<StudyRow> parse_csv(std::istream& source, CsvSchema schema);

// Row builders for each schema.

std::vector<StudyRow> profile_rows(const RunResult& r);
std::vector<StudyRow> timeseries_rows(const RunResult& r);
std::vector<StudyRow> field_rows(const RunResult& r);
std::vector<StudyRow> sweep_rows(std::span<const SweepRow> rows);
std::vector<StudyRow> convergence_rows(std::span<const ConvergenceRow> rows);
std::vector<StudyRow> consistency_rows(std::span<const ConsistencyRow> rows);

/// One Bounds line: case is "diffusive" or "telegraph". sigma and
/// dt_over_tau describe the evaluated step; absent cells stay empty.
StudyRow bounds_row(std::string_view case_name, Species species, const DtBound& bound,
                    std::optional<double> sigma, std::optional<double> dt_over_tau);

}  // namespace tpp
