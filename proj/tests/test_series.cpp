#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "qform/series.hpp"
#include "support.hpp"

using namespace qform;

namespace {

using C = PowerSeries::Coeff;

PowerSeries of(std::vector<C> v)
{
    return PowerSeries(std::move(v));
}

// Counts (x, y) with f(x, y) = n by scanning a box large enough for n <= N.
PowerSeries lattice_count(QuadForm const& f, std::size_t N)
{
    PowerSeries::Coeff const bound = 2 * static_cast<C>(N) + 2;
    std::vector<C> out(N + 1, 0);
    for (C x = -bound; x <= bound; ++x)
        for (C y = -bound; y <= bound; ++y) {
            Wide v = f(x, y);
            if (v <= static_cast<Wide>(N))
                ++out[static_cast<std::size_t>(v)];
        }
    return of(out);
}

} // namespace

TEST_CASE("arithmetic and truncation")
{
    auto x = of({1, 2, 3});
    auto y = of({1, -1, 0, 5});
    CHECK((x + y) == of({2, 1, 3}));
    CHECK((x + y).truncation() == 2);
    CHECK((x - x) == PowerSeries(2));
    CHECK((x * y) == of({1, 1, 1}));
    CHECK((3 * x) == of({3, 6, 9}));
    CHECK((-x) == of({-1, -2, -3}));
    CHECK(PowerSeries::one(3) == of({1, 0, 0, 0}));
    CHECK(PowerSeries::monomial(3, 2, 7) == of({0, 0, 7, 0}));
    CHECK(PowerSeries::monomial(3, 5) == PowerSeries(3));
    CHECK(x.truncated(1) == of({1, 2}));
    CHECK(of({1, 2}) == of({1, 2, 99}));
}

TEST_CASE("overflow is detected")
{
    C const big = std::numeric_limits<C>::max() / 2 + 1;
    CHECK_THROWS_AS(of({big}) + of({big}), std::overflow_error);
    CHECK_THROWS_AS(of({big, 0}) * of({4, 0}), std::overflow_error);
    CHECK_THROWS_AS(3 * of({big}), std::overflow_error);
    CHECK_THROWS_AS(-of({std::numeric_limits<C>::min()}), std::overflow_error);
}

TEST_CASE("first mismatch")
{
    CHECK_FALSE(first_mismatch(of({1, 2, 3}), of({1, 2, 3, 4})).has_value());
    CHECK(first_mismatch(of({1, 2, 3}), of({1, 5, 3})) == Mismatch{1, 2, 5});
}

TEST_CASE("series transforms")
{
    auto s = of({1, 2, 3, 4, 5, 6, 7});
    CHECK(substitute_power(s, 2) == of({1, 0, 2, 0, 3, 0, 4}));
    CHECK(substitute_power(s, 1) == s);
    CHECK(negate_argument(s) == of({1, -2, 3, -4, 5, -6, 7}));
    CHECK(shift(s, 2) == of({0, 0, 1, 2, 3, 4, 5}));
    CHECK(project(s, 3, 1) == of({0, 2, 0, 0, 5, 0, 0}));
    CHECK(project(s, 3, -2) == of({0, 2, 0, 0, 5, 0, 0}));
    CHECK(project(s, 1, 0) == s);
    CHECK(reciprocal(of({1, -1, 0, 0})) == of({1, 1, 1, 1}));
    CHECK(reciprocal(of({-1, 0, 0})) == of({-1, 0, 0}));
    CHECK_THROWS(reciprocal(of({2, 1})));
}

TEST_CASE("theta series examples")
{
    CHECK(theta_series({1, 0, 5}, 6) == of({1, 2, 0, 0, 2, 2, 4}));
    CHECK(theta_series({1, 1, 1}, 1) == of({1, 6}));
    CHECK(theta_series({1, 0, 1}, 5) == of({1, 4, 4, 0, 4, 8}));
    CHECK(theta_series({2, 2, 3}, 7) == of({1, 0, 2, 4, 0, 0, 0, 4}));
    CHECK(theta_series({1, 0, 45}, 0) == of({1}));
    CHECK_THROWS_AS(theta_series({1, 0, -1}, 5), std::domain_error);
}

TEST_CASE("theta series agree with lattice counts")
{
    for (QuadForm f : {QuadForm{1, 0, 1}, {1, 1, 1}, {1, 0, 5}, {2, 2, 3}, {7, 4, 7}, {3, 2, 8}, {4, 4, 29}, {8, 6, 9}})
        CHECK(theta_series(f, 120) == lattice_count(f, 120));
    CHECK(theta_series({1, 0, 1}, 2000) == theta_series({1, 0, 1}, 3000));
}

TEST_CASE("theta series are invariant under SL2(Z)")
{
    std::mt19937_64 rng(11);
    for (QuadForm f : {QuadForm{1, 0, 5}, {2, 2, 3}, {7, 4, 7}, {3, 2, 8}, {13, 12, 47}}) {
        auto base = theta_series(f, 300);
        for (int k = 0; k < 100; ++k)
            REQUIRE(theta_series(testing::random_equivalent(f, rng), 300) == base);
    }
}

TEST_CASE("phi, psi and the Euler product")
{
    CHECK(phi_series(9) == of({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    CHECK(psi_series(10) == of({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(euler_series(7) == of({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(euler_series(6, 2) == of({1, 0, -1, 0, -1, 0, 0}));
    CHECK(euler_series(3, 1, -1) == of({1, 1, -1, 0}));

    // direct product prod (1 - q^n) for comparison
    std::size_t const N = 300;
    PowerSeries prod = PowerSeries::one(N);
    for (std::size_t n = 1; n <= N; ++n)
        prod = prod * (PowerSeries::one(N) - PowerSeries::monomial(N, n));
    CHECK(euler_series(N) == prod);
    CHECK(euler_series(N, 1, -1) == negate_argument(prod));
    CHECK(euler_series(N, 3) == substitute_power(prod, 3));
}

TEST_CASE("eta quotients")
{
    std::size_t const N = 200;
    CHECK(eta_quotient({0, {{1, 1, 1}, {1, -1, 1}}}, N) == PowerSeries::one(N));
    auto partitions = eta_quotient({0, {{1, -1, 1}}}, 100);
    CHECK(partitions[10] == 42);
    CHECK(partitions[100] == 190569292);
    CHECK(eta_quotient({2, {{1, 1, 1}}}, 4) == of({0, 0, 1, -1, -1}));
    // theta of x^2 + y^2 as an eta quotient: phi(q)^2 = E(q^2)^10 / (E(q)^4 E(q^4)^4)
    CHECK(eta_quotient({0, {{2, 10, 1}, {1, -4, 1}, {4, -4, 1}}}, N) == theta_series({1, 0, 1}, N));
    // 1/E(q) at q^500 does not fit in 64 bits
    CHECK_THROWS_AS(eta_quotient({0, {{1, -1, 1}}}, 500), std::overflow_error);
}

TEST_CASE("json round trip")
{
    auto s = theta_series({2, 2, 23}, 30);
    nlohmann::json j = s;
    CHECK(j["truncation"] == 30);
    CHECK(j["coeffs"].size() == 31);
    CHECK(j.get<PowerSeries>() == s);
    CHECK(j.get<PowerSeries>().truncation() == 30);
}
