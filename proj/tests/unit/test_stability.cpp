#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"
#include "tpp/error.hpp"
#include "tpp/stability.hpp"

using namespace tpp;

namespace {

constexpr double kPi = std::numbers::pi;

ModelParams diffusion_only(double d) {
    ModelParams p;
    p.a1 = p.a2 = p.b1 = p.c1 = p.c2 = 0.0;
    p.d1 = p.d2 = d;
    return p;
}

}  // namespace

TEST_CASE("vn_dt_bound_diffusive") {
    const DtBound pure = vn_dt_bound_diffusive(diffusion_only(1.0), 0.1, {}, Species::Prey);
    REQUIRE_FALSE(pure.is_unbounded());
    CHECK(pure.value() == doctest::Approx(0.005).epsilon(1e-14));

    ModelParams p = ModelParams::reference();
    const DtBound prey = vn_dt_bound_diffusive(p, 0.1, {0, 0}, Species::Prey);
    CHECK(prey.value() == doctest::Approx(0.01 / 1.995).epsilon(1e-14));
    CHECK(prey.value() == doctest::Approx(0.00501253).epsilon(1e-6));

    p.d1 = 0.0;
    CHECK(vn_dt_bound_diffusive(p, 0.1, {0, 0}, Species::Prey).is_unbounded());
    CHECK(vn_dt_bound_diffusive(p, 0.1, {0, 0}, Species::Prey).admits(1e9));

    SUBCASE("predator linearisation") {
        // r2 = -a2 + c2 m1 = -0.75 + 0.5*2 = 0.25
        const DtBound b = vn_dt_bound_diffusive(ModelParams::reference(), 0.1, {2.0, 0.0}, Species::Predator);
        CHECK(b.value() == doctest::Approx(0.01 / (2.0 - 0.005 * 0.25)).epsilon(1e-14));
    }
    SUBCASE("per-mode bound is loosest at low wavenumber") {
        const ModelParams q = diffusion_only(1.0);
        const double half = vn_dt_bound_diffusive(q, 0.1, {}, Species::Prey, kPi / 2).value();
        CHECK(half == doctest::Approx(0.01).epsilon(1e-12));
        CHECK(vn_dt_bound_diffusive(q, 0.1, {}, Species::Prey, 0.0).is_unbounded());
        CHECK(vn_dt_bound_diffusive(q, 0.1, {}, Species::Prey, kPi).value() == doctest::Approx(0.005));
    }
    CHECK_THROWS_AS(vn_dt_bound_diffusive(ModelParams::reference(), 0.0, {}, Species::Prey), RejectedParam);
}

TEST_CASE("telegraph_beta") {
    CHECK(telegraph_beta(7.0, 1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(telegraph_beta(0.25, 1.0, kPi)) <= 1e-15);
    CHECK(telegraph_beta(1.0, 1.0, kPi) == doctest::Approx(-1.5).epsilon(1e-15));
}

TEST_CASE("telegraph_amplification examples") {
    const auto dbl = telegraph_amplification(0.25, 1.0, kPi);
    CHECK(std::abs(dbl.g1) <= 1e-7);
    CHECK(std::abs(dbl.g2) <= 1e-7);

    const auto real = telegraph_amplification(1.0, 1.0, kPi);
    CHECK_FALSE(real.is_complex());
    CHECK(real.max_modulus() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::min(std::abs(real.g1), std::abs(real.g2)) <= 1e-15);

    const auto cplx = telegraph_amplification(0.1, 0.5, kPi);
    CHECK(cplx.beta == doctest::Approx(0.65).epsilon(1e-14));
    CHECK(cplx.discriminant() == doctest::Approx(-0.0775).epsilon(1e-12));
    CHECK(cplx.is_complex());
    CHECK(std::norm(cplx.g1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::norm(cplx.g2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cplx.g1 == std::conj(cplx.g2));
}

TEST_CASE("amplification roots solve their quadratic") {
    for (int n = 0; n < 20000; ++n) {
        const double sigma = testing::uniform(0.0, 2.0);
        const double r = 1.0 - testing::uniform(0.0, 1.0);  // (0, 1]
        const double xi = testing::uniform(0.0, kPi);
        const auto roots = telegraph_amplification(sigma, r, xi);
        CHECK(roots.residual(roots.g1) <= 1e-10);
        CHECK(roots.residual(roots.g2) <= 1e-10);
        if (roots.is_complex()) {
            CHECK(std::abs(std::norm(roots.g1) - (1.0 - r)) <= 1e-12);
            CHECK(std::abs(std::norm(roots.g2) - (1.0 - r)) <= 1e-12);
        }
    }
}

TEST_CASE("sigma <= 1/4 keeps every mode bounded") {
    double worst = 0.0;
    for (int a = 0; a <= 25; ++a) {
        for (int b = 1; b <= 40; ++b) {
            const double sigma = 0.25 * a / 25;
            const double r = b / 40.0;
            for (int j = 0; j <= 720; ++j) worst = std::max(worst, telegraph_amplification(sigma, r, kPi * j / 720).max_modulus());
        }
    }
    CHECK(worst <= 1.0 + 1e-12);
    // Sufficient, not sharp: at dt/tau = 1 the roots are 0 and 2 beta, so
    // growth starts only past sigma = 1/2.
    CHECK(telegraph_amplification(0.45, 1.0, kPi).max_modulus() <= 1.0);
    CHECK(telegraph_amplification(0.55, 1.0, kPi).max_modulus() > 1.0);
}

TEST_CASE("telegraph_vn_stable") {
    const auto a = telegraph_vn_stable(1, 0.05, 0.1, 0.002);
    CHECK(a.stable);
    CHECK(a.sigma == doctest::Approx(0.2));
    CHECK(a.dt_over_tau == doctest::Approx(0.04));
    const auto b = telegraph_vn_stable(2, 0.05, 0.1, 0.002);
    CHECK_FALSE(b.stable);
    CHECK(b.sigma == doctest::Approx(0.4));
    const auto c = telegraph_vn_stable(1, 0.05, 0.1, 0.06);
    CHECK_FALSE(c.stable);
    CHECK(c.dt_over_tau == doctest::Approx(1.2));

    CHECK(telegraph_dt_bound(1, 0.05, 0.1).value() == doctest::Approx(0.0025));
    CHECK(telegraph_dt_bound(0.1, 0.01, 0.1).value() == doctest::Approx(0.01));
    CHECK(telegraph_dt_bound(0.0, 0.01, 0.1).value() == doctest::Approx(0.01));
}

TEST_CASE("lemma1") {
    const auto a = lemma1(1.0, 0.5);
    CHECK(a.holds);
    CHECK(a.value == 1.0);
    const auto b = lemma1(0.5, 0.75);
    CHECK(b.holds);
    CHECK(b.value == 1.0);
    const auto c = lemma1(0.8, 0.5);
    CHECK(c.holds);
    CHECK(c.value == doctest::Approx(0.7236068).epsilon(1e-7));

    CHECK_FALSE(lemma1_holds(0.5, 0.9));
    CHECK_THROWS_AS(lemma1(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(lemma1(1.5, 0.5), DomainError);
    CHECK_THROWS_AS(lemma1(0.1, 0.5), DomainError);  // negative radicand
}

TEST_CASE("lemma1 holds on admissible samples") {
    int failures = 0;
    for (int n = 0; n < 10000; ++n) {
        const double x = 1.0 - testing::uniform(0.0, 1.0);
        const double lo = std::max(0.5, std::sqrt(1.0 - x));
        const double y = testing::uniform(lo, 1.0 - x / 2.0);
        if (!lemma1_holds(x, y)) ++failures;
    }
    CHECK(failures == 0);
}
