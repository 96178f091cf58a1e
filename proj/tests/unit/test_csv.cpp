#include <doctest.h>

#include <limits>
#include <sstream>

#include "properties.hpp"
#include "tpp/csv.hpp"
#include "tpp/error.hpp"

using namespace tpp;

TEST_CASE("headers") {
    CHECK(csv_header(CsvSchema::Profile) == "x,s1,s2");
    CHECK(csv_header(CsvSchema::Timeseries) == "t,s1_probe,s2_probe,P1,P2");
    CHECK(csv_header(CsvSchema::Field) == "t,x,s1,s2");
    CHECK(csv_header(CsvSchema::Sweep) == "D,tau,verdict,first_failure_time,min_density,max_abs_density");
    CHECK(csv_header(CsvSchema::Convergence) == "dx,dt,P1_final,P2_final,runtime_s");
    CHECK(csv_header(CsvSchema::Bounds) == "case,species,dt_max_or_unbounded,sigma,dt_over_tau");
    CHECK(column_count(CsvSchema::Sweep) == 6);
}

TEST_CASE("format_real") {
    CHECK(format_real(73.13264) == "73.13264");
    CHECK(format_real(1.0 / 3.0) == "0.333333333");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1e-20) == "1e-20");
    CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_real(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("emit_csv") {
    std::ostringstream empty;
    const std::size_t n = emit_csv({}, CsvSchema::Convergence, empty);
    CHECK(n == empty.str().size());
    CHECK(empty.str() == "dx,dt,P1_final,P2_final,runtime_s\n");

    SweepRow row;
    row.d = 20;
    row.tau = 0.05;
    row.verdict.min_density = 0;
    row.verdict.max_abs_density = 15;
    const std::vector<SweepRow> rows{row};
    std::ostringstream one;
    emit_csv(sweep_rows(rows), CsvSchema::Sweep, one);
    CHECK(one.str() == "D,tau,verdict,first_failure_time,min_density,max_abs_density\n20,0.05,Stable,,0,15\n");

    std::ostringstream bad;
    const std::vector<StudyRow> wrong{StudyRow{{1.0, 2.0}}};
    CHECK_THROWS_AS(emit_csv(wrong, CsvSchema::Sweep, bad), Error);

    std::ostringstream closed;
    closed.setstate(std::ios::badbit);
    CHECK_THROWS_AS(emit_csv({}, CsvSchema::Sweep, closed), IoError);
}

TEST_CASE("bounds_row") {
    const auto row = bounds_row("diffusive", Species::Prey, DtBound::unbounded(), std::nullopt, std::nullopt);
    std::ostringstream out;
    emit_csv(std::vector<StudyRow>{row}, CsvSchema::Bounds, out);
    CHECK(out.str() == "case,species,dt_max_or_unbounded,sigma,dt_over_tau\ndiffusive,prey,unbounded,,\n");
}

TEST_CASE("csv determinism") {
    const auto r = testing::csv_determinism_property(50, 21);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("csv round-trip") {
    const auto r = testing::csv_round_trip_property(100, 22);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("parse_csv rejects a foreign header") {
    std::istringstream in("a,b\n1,2\n");
    CHECK_THROWS_AS(parse_csv(in, CsvSchema::Convergence), ParseError);
}
