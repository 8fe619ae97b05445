#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weightdec/lp.hpp"
#include "weightdec/quantum.hpp"

#include <random>
#include <stdexcept>

using namespace weightdec;

namespace {

void check_witness(const PolyWitness& w, const WeightInstance& inst) {
    CHECK(w.residual <= 1e-6);
    CHECK(static_cast<int>(w.coeffs.size()) == w.degree + 1);
    CHECK(w.evaluate(inst.k) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(w.evaluate(inst.l) == doctest::Approx(1.0).epsilon(1e-6));
    for (int j = 0; j <= inst.n; ++j) {
        const double p = w.evaluate(j);
        CHECK(p >= -1e-6);
        CHECK(p <= 1.0 + 1e-6);
    }
}

}  // namespace

TEST_CASE("degree_feasible hand-checked instances") {
    const WeightInstance easy(2, 0, 2);
    const auto w1 = degree_feasible(easy, 1);
    REQUIRE(w1.has_value());
    check_witness(*w1, easy);

    const WeightInstance hard(2, 0, 1);
    CHECK_FALSE(degree_feasible(hard, 1).has_value());
    const auto w2 = degree_feasible(hard, 2);
    REQUIRE(w2.has_value());
    check_witness(*w2, hard);
}

TEST_CASE("degree_feasible argument and cap errors") {
    CHECK_THROWS_AS(degree_feasible(WeightInstance(4, 0, 1), 5), std::invalid_argument);
    CHECK_THROWS_AS(degree_feasible(WeightInstance(4, 0, 1), -1), std::invalid_argument);
    CHECK_THROWS_AS(degree_feasible(WeightInstance(400, 0, 200), 2), resource_error);
}

TEST_CASE("min_degree spot values") {
    CHECK(min_degree(WeightInstance(2, 0, 1)) == 2);
    CHECK(min_degree(WeightInstance(2, 0, 2)) == 1);
    CHECK(min_degree(WeightInstance(2, 1, 2)) == 2);
}

TEST_CASE("qe_degree_lower spot values") {
    CHECK(qe_degree_lower(WeightInstance(2, 0, 1)) == 1);
    CHECK(qe_degree_lower(WeightInstance(2, 0, 2)) == 1);
    CHECK(qe_degree_lower(WeightInstance(8, 2, 4)) <= 3);
}

TEST_CASE("full-degree interpolation fallback is feasible") {
    for (const WeightInstance inst :
         {WeightInstance(5, 0, 1), WeightInstance(9, 4, 5), WeightInstance(7, 2, 3),
          WeightInstance(12, 5, 6)}) {
        const auto w = degree_feasible(inst, inst.n);
        REQUIRE(w.has_value());
        check_witness(*w, inst);
    }
}

TEST_CASE("feasibility is monotone in the degree") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> nd(2, 16);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = nd(rng);
        const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int l = std::uniform_int_distribution<int>(k + 1, n)(rng);
        const WeightInstance inst(n, k, l);
        bool was_feasible = false;
        for (int D = 1; D <= n; ++D) {
            const bool now = degree_feasible(inst, D).has_value();
            if (was_feasible) CHECK(now);
            was_feasible = now;
        }
        CHECK(was_feasible);
    }
}

TEST_CASE("complement symmetry of min_degree") {
    std::mt19937 rng(32);
    std::uniform_int_distribution<int> nd(2, 14);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = nd(rng);
        const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int l = std::uniform_int_distribution<int>(k + 1, n)(rng);
        CHECK(min_degree(WeightInstance(n, k, l)) ==
              min_degree(WeightInstance(n, n - l, n - k)));
    }
}

TEST_CASE("degree lower bound sits under the region upper bound") {
    std::mt19937 rng(33);
    std::uniform_int_distribution<int> nd(2, 40);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = nd(rng);
        const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const int l = std::uniform_int_distribution<int>(k + 1, n)(rng);
        const WeightInstance inst(n, k, l);
        CHECK(qe_degree_lower(inst) <= bounds_instance(inst).upper);
    }
}
