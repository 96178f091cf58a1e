#include <doctest.h>

#include "tpp/consistency.hpp"
#include "tpp/error.hpp"

using namespace tpp;

namespace {

const GridSpec kBase = build_grid(0, 50, 0, 1, 0.5, 0.01);

}  // namespace

TEST_CASE("telegraph residual is first order in time") {
    const auto rows = consistency_order_study(ModelParams::reference().with_transport(1.0, 0.05), kBase, 6);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].dt == doctest::Approx(rows[i - 1].dt / 2));
        CHECK(rows[i].dx * rows[i].dx == doctest::Approx(rows[i - 1].dx * rows[i - 1].dx / 2));
        CHECK(rows[i].residual < rows[i - 1].residual);
        if (i >= 2) {
            const double ratio = rows[i - 1].residual / rows[i].residual;
            CHECK(ratio >= 1.7);
            CHECK(ratio <= 2.3);
        }
    }
    const double order = observed_temporal_order(rows);
    CHECK(order >= 0.8);
    CHECK(order <= 1.2);
}

TEST_CASE("diffusive residual is first order in time") {
    ModelParams p = ModelParams::reference();
    p.tau1 = p.tau2 = 0.0;
    const auto rows = consistency_order_study(p, kBase, 6, Scheme::Diffusive);
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].residual < rows[i - 1].residual);
    const double order = observed_temporal_order(rows);
    CHECK(order >= 0.8);
    CHECK(order <= 1.2);
}

TEST_CASE("consistency study rejects too few levels") {
    CHECK_THROWS_AS(consistency_order_study(ModelParams::reference(), kBase, 2), RejectedParam);
}
