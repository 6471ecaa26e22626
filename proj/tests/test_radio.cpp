#include "drsim/radio.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace drsim;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("default constants and crossover distance")
{
    const RadioParams r;
    CHECK(r.e_elec() == 50e-9);
    CHECK(r.e_fs() == 10e-12);
    CHECK(r.e_mp() == 0.0013e-12);
    CHECK(r.e_da() == 5e-9);
    CHECK(r.d0() == doctest::Approx(87.7058).epsilon(1e-6));
    CHECK(r.d0() == std::sqrt(r.e_fs() / r.e_mp()));

    CHECK_THROWS_AS(RadioParams(0, 1e-12, 1e-15, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(RadioParams(1e-9, -1e-12, 1e-15, 1e-9), std::invalid_argument);
}

TEST_CASE("tx_energy")
{
    const RadioParams r;
    CHECK(rel(tx_energy(r, 4000, 10.0), 2.04e-4) < 1e-15);
    CHECK(tx_energy(r, 0, 10.0) == 0.0);
    CHECK(tx_energy(r, 0, 500.0) == 0.0);

    SUBCASE("both branches agree at d0")
    {
        const double d0 = r.d0();
        const double fs = r.e_elec() + r.e_fs() * d0 * d0;
        const double mp = r.e_elec() + r.e_mp() * d0 * d0 * d0 * d0;
        CHECK(rel(fs, mp) < 1e-15);
        // The multipath branch applies from d0 upward.
        CHECK(rel(tx_energy(r, 1, d0), mp) < 1e-15);
    }

    SUBCASE("continuity across the crossover")
    {
        // The gap closes linearly in epsilon, at the sum of the two one-sided slopes.
        const double slope = 2 * r.e_fs() * r.d0() + 4 * r.e_mp() * std::pow(r.d0(), 3);
        for (double eps : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
            const double gap = tx_energy(r, 1, r.d0() + eps) - tx_energy(r, 1, r.d0() - eps);
            CHECK(gap > 0.0);
            CHECK(gap / eps == doctest::Approx(slope).epsilon(1e-3));
        }
        const double lo = tx_energy(r, 4000, r.d0() - 1e-6);
        const double hi = tx_energy(r, 4000, r.d0() + 1e-6);
        CHECK(rel(lo, hi) < 1e-7);
    }

    SUBCASE("the model charges the larger amplifier term")
    {
        for (double dist : {1.0, 30.0, 80.0, 87.0, 88.0, 120.0, 300.0}) {
            const double fs = r.e_fs() * dist * dist;
            const double mp = r.e_mp() * std::pow(dist, 4);
            CHECK(tx_energy(r, 1, dist) == doctest::Approx(r.e_elec() + std::max(fs, mp)).epsilon(1e-14));
            CHECK(tx_energy(r, 1, dist) == doctest::Approx(r.e_elec() + (dist < r.d0() ? fs : mp)).epsilon(1e-14));
        }
    }

    SUBCASE("linear in bits, monotone in both arguments")
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> dist(0.0, 200.0);
        std::uniform_int_distribution<Bits> bits(0, 100000);
        for (int i = 0; i < 500; ++i) {
            const Bits b = bits(rng);
            const double a = dist(rng), c = dist(rng);
            CHECK(tx_energy(r, 2 * b, a) == 2 * tx_energy(r, b, a));
            CHECK(tx_energy(r, b, std::min(a, c)) <= tx_energy(r, b, std::max(a, c)));
            CHECK(tx_energy(r, b, a) <= tx_energy(r, b + 1, a));
        }
    }

    CHECK_THROWS_AS(tx_energy(r, -1, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(tx_energy(r, 10, -0.5), std::invalid_argument);
}

TEST_CASE("rx_energy and agg_energy")
{
    const RadioParams r;
    CHECK(rel(rx_energy(r, 4000), 2.0e-4) < 1e-15);
    CHECK(rx_energy(r, 0) == 0.0);
    CHECK(rx_energy(r, 1) == 5.0e-8);
    CHECK_THROWS_AS(rx_energy(r, -4), std::invalid_argument);

    CHECK(rel(agg_energy(r, 4000, 10), 2.0e-4) < 1e-15);
    CHECK(agg_energy(r, 4000, 0) == 0.0);
    CHECK(agg_energy(r, 1, 1) == 5e-9);
    CHECK_THROWS_AS(agg_energy(r, -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(agg_energy(r, 1, -2), std::invalid_argument);
}
