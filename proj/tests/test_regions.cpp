#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weightdec/regions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace weightdec;

namespace {

bool same_pair(const BoundaryPair& a, const BoundaryPair& b) {
    return a.d == b.d && a.delta == b.delta && a.gamma == b.gamma;
}

bool pair_in_level(const BoundaryPair& bp, int d) {
    for (const auto& other : boundary_pairs(d))
        if (same_pair(other, bp)) return true;
    return false;
}

}  // namespace

TEST_CASE("RatioPoint validation") {
    CHECK_NOTHROW(RatioPoint(0.0, 1.0));
    CHECK_NOTHROW(RatioPoint(0.0, 1e-9));
    CHECK_THROWS_AS(RatioPoint(0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(RatioPoint(0.7, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(RatioPoint(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(RatioPoint(0.1, 1.1), std::invalid_argument);
}

TEST_CASE("WeightInstance validation") {
    CHECK_NOTHROW(WeightInstance(4, 0, 1));
    CHECK_THROWS_AS(WeightInstance(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(WeightInstance(4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(WeightInstance(4, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(WeightInstance(0, 0, 0), std::invalid_argument);
}

TEST_CASE("in_UL examples") {
    CHECK(in_UL(RatioPoint(0.0, 0.6), RatioPoint(0.0, 0.5)));
    CHECK_FALSE(in_UL(RatioPoint(0.3, 0.7), RatioPoint(0.25, 0.75)));
    // the anchor belongs to its own closed region
    for (int d = 1; d <= 4; ++d)
        for (const auto& bp : boundary_pairs(d))
            CHECK(in_UL(RatioPoint(bp.s, bp.t), bp));
}

TEST_CASE("in_LR examples") {
    CHECK_FALSE(in_LR(RatioPoint(0.25, 0.75), RatioPoint(0.0, 0.5)));
    CHECK(in_LR(RatioPoint(0.3, 0.7), RatioPoint(0.25, 0.75)));
    // the anchor is excluded from its own region
    for (int d = 1; d <= 4; ++d)
        for (const auto& bp : boundary_pairs(d))
            CHECK_FALSE(in_LR(RatioPoint(bp.s, bp.t), bp));
}

TEST_CASE("search_cap examples") {
    CHECK(search_cap(RatioPoint(0.0, 1.0)) == 2);
    CHECK(search_cap(RatioPoint(0.0, 0.25)) == 4);
    CHECK(search_cap(RatioPoint(0.25, 0.75)) == 4);
    // ratio gaps too small to search are rejected, not walked forever
    CHECK_THROWS_AS(search_cap(RatioPoint(0.4999999, 0.5000001)), resource_error);
    CHECK_THROWS_AS(upper_bound(RatioPoint(0.4999999, 0.5000001)), resource_error);
}

TEST_CASE("upper_bound examples") {
    const auto r1 = upper_bound(RatioPoint(0.0, 0.5));
    CHECK(r1.d == 1);
    CHECK(r1.anchor.s == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r1.anchor.t == doctest::Approx(0.5).epsilon(1e-12));

    const auto r2 = upper_bound(RatioPoint(0.25, 0.75));
    CHECK(r2.d == 2);
    CHECK(r2.anchor.delta == 1);
    CHECK(r2.anchor.gamma == 1);

    const auto r3 = upper_bound(RatioPoint(0.3, 0.7));
    CHECK(r3.d == 3);
    CHECK(in_UL(RatioPoint(0.3, 0.7), r3.anchor));
    CHECK(pair_in_level(r3.anchor, 3));
    // first admitting anchor in (delta, gamma) order: the T_6 pair (1/4, 1/2)
    CHECK(r3.anchor.delta == 0);
    CHECK(r3.anchor.gamma == 2);
    // no membership at smaller budgets
    for (int d = 1; d <= 2; ++d)
        for (const auto& bp : boundary_pairs(d))
            CHECK_FALSE(in_UL(RatioPoint(0.3, 0.7), bp));
}

TEST_CASE("lower_bound examples") {
    const auto r1 = lower_bound(RatioPoint(0.0, 0.25));
    CHECK(r1.value == 2);
    REQUIRE(r1.anchor.has_value());
    CHECK(r1.anchor->s == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r1.anchor->t == doctest::Approx(0.5).epsilon(1e-12));

    const auto r2 = lower_bound(RatioPoint(0.3, 0.7));
    CHECK(r2.value == 3);
    REQUIRE(r2.anchor.has_value());
    CHECK(r2.anchor->s == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r2.anchor->t == doctest::Approx(0.75).epsilon(1e-12));

    const auto r3 = lower_bound(RatioPoint(0.0, 1.0));
    CHECK(r3.value == 1);
    CHECK_FALSE(r3.anchor.has_value());
}

TEST_CASE("bounds examples") {
    const auto b1 = bounds(RatioPoint(0.3, 0.7));
    CHECK(b1.upper == 3);
    CHECK(b1.lower == 3);
    CHECK(b1.matched);
    CHECK_FALSE(b1.asymptotic_lower);

    const auto b2 = bounds(RatioPoint(0.0, 0.25));
    CHECK(b2.upper == 2);
    CHECK(b2.lower == 2);
    CHECK(b2.matched);

    const auto b3 = bounds(RatioPoint(0.25, 0.75));
    CHECK(b3.upper == 2);
    CHECK(b3.lower == 1);
    CHECK_FALSE(b3.matched);
}

TEST_CASE("bounds_instance examples") {
    const auto b1 = bounds_instance(WeightInstance(4, 0, 1));
    CHECK(b1.upper == 2);
    CHECK(b1.lower == 2);
    CHECK(b1.asymptotic_lower);

    CHECK(bounds_instance(WeightInstance(2, 1, 2)).upper == 1);

    const auto b3 = bounds_instance(WeightInstance(10, 3, 7));
    CHECK(b3.upper == 3);
    CHECK(b3.lower == 3);
}

TEST_CASE("g_query_complexity examples and edges") {
    CHECK(g_query_complexity(0.0) == 1);
    CHECK(g_query_complexity(0.1) == 2);
    CHECK(g_query_complexity(0.25) == 3);
    // the bucket endpoint (2 - sqrt(2))/4 still belongs to d = 2
    CHECK(g_query_complexity((2.0 - std::sqrt(2.0)) / 4.0) == 2);
    CHECK_THROWS_AS(g_query_complexity(0.5), std::invalid_argument);
    CHECK_THROWS_AS(g_query_complexity(-0.01), std::invalid_argument);

    // defining bucket inequality for sampled kappas
    using std::numbers::pi;
    for (double kappa : {0.01, 0.07, 0.2, 0.3, 0.4, 0.45, 0.49, 0.4999999}) {
        const int d = g_query_complexity(kappa);
        CHECK(d >= 2);
        const double hi = 0.5 * (1 - std::cos((d - 1) * pi / (2.0 * d)));
        const double lo = 0.5 * (1 - std::cos((d - 2) * pi / (2.0 * (d - 1))));
        CHECK(kappa <= hi + 1e-12);
        CHECK(kappa > lo);
    }

    // close enough to 1/2 that the bucket index overflows: rejected
    CHECK_THROWS_AS(g_query_complexity(0.5 - 1e-13), resource_error);
}

TEST_CASE("g/f coherence on the lambda = 1/2 line") {
    for (int i = 1; i < 100; ++i) {
        const double kappa = 0.005 * i;
        if (kappa >= 0.5) break;
        const auto b = bounds(RatioPoint(kappa, 0.5));
        if (b.matched) CHECK(g_query_complexity(kappa) == b.upper);
    }
}

TEST_CASE("complement symmetry of bounds") {
    const int res = 40;
    for (int i = 0; i < res; ++i)
        for (int j = i + 1; j < res; ++j) {
            const double kap = (i + 0.5) / res, lam = (j + 0.5) / res;
            const auto b = bounds(RatioPoint(kap, lam));
            const auto m = bounds(RatioPoint(1.0 - lam, 1.0 - kap));
            CHECK(b.upper == m.upper);
            CHECK(b.lower == m.lower);
        }
}

TEST_CASE("consistency and witnesses on a dense grid") {
    const int res = 60;
    for (int i = 0; i < res; ++i)
        for (int j = i + 1; j < res; ++j) {
            const RatioPoint p((i + 0.5) / res, (j + 0.5) / res);
            const auto ub = upper_bound(p);
            const auto lb = lower_bound(p);
            CHECK(lb.value <= ub.d);
            CHECK(in_UL(p, ub.anchor));
            CHECK(pair_in_level(ub.anchor, ub.d));
            if (lb.anchor) {
                CHECK(in_LR(p, *lb.anchor));
                CHECK(pair_in_level(*lb.anchor, lb.value - 1));
            }
        }
}

TEST_CASE("asymptotic envelope for instances") {
    // upper * (l-k) / sqrt((n-k) l) stays below a fixed constant
    for (int n : {10, 100, 1000}) {
        const int step = std::max(1, n / 10);
        for (int k = 0; k < n; k += step)
            for (int l = k + 1; l <= n; l += step) {
                const auto ub = upper_bound(WeightInstance(n, k, l).ratio());
                const double envelope =
                    ub.d * (l - k) / std::sqrt(static_cast<double>(n - k) * l);
                CHECK(envelope <= 4.0);
            }
    }
}
