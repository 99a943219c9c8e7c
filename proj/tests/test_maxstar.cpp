#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "test_util.hpp"
#include "turbokit/maxstar.hpp"

using namespace turbokit;

TEST_SUITE_BEGIN("maxstar");

TEST_CASE("exact kernel values") {
    const auto v = MaxStarVariant::exact();
    CHECK(maxstar(0.0, 0.0, v) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(maxstar(1.0, 2.0, v) == doctest::Approx(2.0 + std::log1p(std::exp(-1.0))));
    CHECK(maxstar(1.0, 2.0, v) == doctest::Approx(2.313262).epsilon(1e-6));
    CHECK(correction_fc(0.0, v) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("max-only kernel drops the correction") {
    const auto v = MaxStarVariant::max_only();
    CHECK(maxstar(1.0, 2.0, v) == 2.0);
    CHECK(correction_fc(0.7, v) == 0.0);
}

TEST_CASE("constant correction") {
    const auto v = MaxStarVariant::constant();
    CHECK(correction_fc(1.0, v) == 0.5);
    CHECK(correction_fc(1.5, v) == 0.5);
    CHECK(correction_fc(2.0, v) == 0.0);
}

TEST_CASE("linear correction") {
    const auto v = MaxStarVariant::linear();
    CHECK(correction_fc(2.5068, v) == 0.0);
    CHECK(correction_fc(5.0, v) == 0.0);
    CHECK(correction_fc(0.0, v) == doctest::Approx(0.24904 * 2.5068));
    CHECK(correction_fc(0.0, v) == doctest::Approx(0.62434).epsilon(2e-3));
    CHECK(correction_fc(1.0, v) == doctest::Approx(-0.24904 * (1.0 - 2.5068)));
}

TEST_CASE("the sentinel is absorbing in every variant") {
    for (const auto& v : {MaxStarVariant::exact(), MaxStarVariant::max_only(),
                          MaxStarVariant::constant(), MaxStarVariant::linear()}) {
        CHECK(maxstar(5.0, kLogZero, v) == 5.0);
        CHECK(maxstar(kLogZero, 5.0, v) == 5.0);
        CHECK(maxstar(kLogZero, kLogZero, v) == kLogZero);
    }
}

TEST_CASE("negative |x - y| is rejected") {
    CHECK_THROWS_AS(correction_fc(-0.1, MaxStarVariant::exact()), std::domain_error);
}

TEST_CASE("exact kernel algebra") {
    Rng rng(31);
    const auto v = MaxStarVariant::exact();
    for (int i = 0; i < 2000; ++i) {
        const double x = 10.0 * rng.gaussian();
        const double y = 10.0 * rng.gaussian();
        const double m = maxstar(x, y, v);
        CHECK(m == maxstar(y, x, v)); // commutative
        CHECK(m >= std::max(x, y));
        CHECK(m <= std::max(x, y) + std::log(2.0) + 1e-15);
        // monotone in each argument; strictly so while the correction is
        // large enough to register at double precision
        CHECK(maxstar(x + 0.5, y, v) >= m);
        CHECK(maxstar(x, y + 0.5, v) >= m);
        if (std::abs(x - y) < 20.0) {
            CHECK(maxstar(x + 0.5, y, v) > m);
            CHECK(maxstar(x, y + 0.5, v) > m);
        }
    }
}

TEST_CASE("exact correction is strictly decreasing on [0, 20]") {
    const auto v = MaxStarVariant::exact();
    double prev = correction_fc(0.0, v);
    for (double z = 0.05; z <= 20.0; z += 0.05) {
        const double cur = correction_fc(z, v);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("kernel equals max plus correction for every variant") {
    Rng rng(32);
    for (const auto& v : {MaxStarVariant::exact(), MaxStarVariant::max_only(),
                          MaxStarVariant::constant(), MaxStarVariant::linear()}) {
        for (int i = 0; i < 500; ++i) {
            const double x = 5.0 * rng.gaussian();
            const double y = 5.0 * rng.gaussian();
            CHECK(maxstar(x, y, v) == std::max(x, y) + correction_fc(std::abs(x - y), v));
        }
    }
}

TEST_SUITE_END();
