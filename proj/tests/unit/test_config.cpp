#include <doctest.h>

#include <filesystem>

#include "tpp/config.hpp"
#include "tpp/error.hpp"

using namespace tpp;

TEST_CASE("parse_config defaults") {
    const RunConfig c = parse_config("dx = 0.1\ndt = 0.001\n");
    CHECK(c.params.a1 == 1.0);
    CHECK(c.params.a2 == 0.75);
    CHECK(c.params.b1 == 0.5);
    CHECK(c.params.c1 == 0.5);
    CHECK(c.params.c2 == 0.5);
    CHECK(c.params.d1 == 1.0);
    CHECK(c.params.tau2 == 0.001);
    CHECK(c.ic == InitialCondition{15, 24, 26});
    CHECK(c.domain == Domain{0, 50, 0, 100});
    CHECK(c.grid.ni == 501);
    CHECK(c.grid.nj == 100001);
    CHECK(c.scheme == Scheme::Telegraph);
    CHECK(c.neg_tol == doctest::Approx(1.5e-8));
}

TEST_CASE("parse_config keys, comments and spacing") {
    const RunConfig c = parse_config(
        "# stable point\n"
        "  d1=20\n"
        "d2 = 20   # trailing comment\n"
        "tau1 = 0.05\ntau2 = 0.05\n"
        "\n"
        "t_end = 20\n"
        "dx = 0.1\n"
        "dt = 0.0015255\n"
        "grid_fit = nearest\n"
        "scheme = telegraph\n"
        "field_stride = 100\n");
    CHECK(c.params.d1 == 20.0);
    CHECK(c.params.tau2 == 0.05);
    CHECK(c.grid_fit == GridFit::Nearest);
    CHECK(c.grid.nj == 13111);
    CHECK(c.probes().field_stride == 100);
}

TEST_CASE("parse_config errors") {
    try {
        parse_config("dx = -0.1\n");
        FAIL("expected RejectedParam");
    } catch (const RejectedParam& e) {
        CHECK(e.name() == "dx");
    }
    try {
        parse_config("dx = 0.1\nunknownKey = 3\n");
        FAIL("expected UnknownKey");
    } catch (const UnknownKey& e) {
        CHECK(e.key() == "unknownKey");
    }
    try {
        parse_config("dx = 0.1\ndx = 0.2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_config("dx 0.1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("dx = abc\n"), ParseError);
    CHECK_THROWS_AS(parse_config("dx = 0.1x\n"), ParseError);
    CHECK_THROWS_AS(parse_config("scheme = implicit\n"), ParseError);
    CHECK_THROWS_AS(parse_config("= 4\n"), ParseError);
    CHECK_THROWS_AS(parse_config("dt = 0.0015255\n"), NonCommensurate);
    CHECK_THROWS_AS(parse_config("tau1 = 0\n"), RejectedParam);
    CHECK_NOTHROW(parse_config("tau1 = 0\nscheme = diffusive\n"));
    CHECK_THROWS_AS(parse_config("ic_lo = 30\n"), RejectedParam);
    CHECK_THROWS_AS(parse_config("probe_x = 51\n"), RejectedParam);
}

TEST_CASE("parse_levels") {
    const auto l = parse_levels("dx,dt\n5.0,0.002\n# comment\n0.1, 0.001\n");
    REQUIRE(l.size() == 2);
    CHECK(l[0].dx == 5.0);
    CHECK(l[1].dt == 0.001);
    CHECK_THROWS_AS(parse_levels("0.1\n"), ParseError);
    CHECK_THROWS_AS(parse_levels("0.1,-1\n"), RejectedParam);
    CHECK_THROWS_AS(parse_levels(""), RejectedParam);
}

TEST_CASE("missing files raise IoError") {
    CHECK_THROWS_AS(load_config("/nonexistent/dir/run.cfg"), IoError);
    CHECK_THROWS_AS(load_levels(std::filesystem::path("/nonexistent/levels.csv")), IoError);
}
