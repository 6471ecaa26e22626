#include "drsim/analytic.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace drsim;

namespace {

// T = 2.04e-4 J, R = 2.0e-4 J, phi = 2.0e-4 J, rho = 0.01, d = 16.67.
AnalyticInputs worked(double p)
{
    return AnalyticInputs{0.01, 16.67, p, constant_tx_energy(2.04e-4), 2.0e-4, 2.0e-4};
}

}  // namespace

TEST_CASE("populations")
{
    // rho d^2 = 0.01 x 277.8889 = 2.778889
    CHECK(inner_population(0.01, 16.67) == doctest::Approx(11.115556).epsilon(1e-6));
    CHECK(corner_population(0.01, 16.67) == doctest::Approx(2.778889).epsilon(1e-6));
    CHECK(ncr_population(0.01, 16.67, 1) == doctest::Approx(5.557778).epsilon(1e-6));
    CHECK(ncr_population(0.01, 16.67, 2) == doctest::Approx(11.115556).epsilon(1e-6));

    // Inner square plus 4 NCRs and 4 corners per ring covers the whole field.
    for (int n = 2; n <= 8; ++n) {
        for (double length : {50.0, 100.0, 333.0}) {
            const double rho = 100.0 / (length * length);
            const double d = length / (2.0 * n);
            double total = inner_population(rho, d);
            for (int k = 1; k < n; ++k) total += 4.0 * ncr_population(rho, d, k) + 4.0 * corner_population(rho, d);
            CHECK(total == doctest::Approx(100.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("closed forms on a worked example")
{
    // 11.115556 x 2.04e-4
    CHECK(e_inner_square(worked(0.5)) == doctest::Approx(2.267573e-3).epsilon(1e-6));
    // 2.778889 x 2.04e-4, and half of it at P = 0.5
    CHECK(e_corner_region(worked(0.0)) == doctest::Approx(5.668934e-4).epsilon(1e-6));
    CHECK(e_corner_region(worked(0.5)) == doctest::Approx(2.834467e-4).epsilon(1e-6));
    CHECK(e_corner_region(worked(1.0)) == 0.0);
    CHECK(e_corner_uplink(worked(0.5)) == doctest::Approx(2.834467e-4).epsilon(1e-6));

    const RingEnergy ring = e_middle_square_total(worked(0.5));
    // 4 x 4.557778 x 2.04e-4
    CHECK(ring.member_tx == doctest::Approx(3.719147e-3).epsilon(1e-6));
    // (22.231111 + 5.557778) x 2.04e-4 + 8e-4
    CHECK(ring.ch_tx == doctest::Approx(6.468933e-3).epsilon(1e-6));
    // (18.231111 + 5.557778) x 2.0e-4
    CHECK(ring.ch_rx == doctest::Approx(4.757778e-3).epsilon(1e-6));
    CHECK(ring.total() == doctest::Approx(1.494586e-2).epsilon(1e-6));
    CHECK_FALSE(ring.degenerate_density);

    const RingEnergy outer = e_outer_square_total(worked(0.5));
    CHECK(outer.ring == 2);
    // 4 x 10.115556 x 2.04e-4
    CHECK(outer.member_tx == doctest::Approx(8.254293e-3).epsilon(1e-6));
}

TEST_CASE("link classes are priced independently")
{
    AnalyticInputs in = worked(0.25);
    in.t_energy = [](Link link, int ring) {
        switch (link) {
        case Link::InnerToBs: return 1.0;
        case Link::CornerToBs: return 10.0 * ring;
        case Link::CornerToCh: return 100.0 * ring;
        case Link::MemberToCh: return 1000.0;
        case Link::ChToNextHop: return 10000.0;
        }
        return 0.0;
    };
    in.r_energy = 0.0;
    in.phi = 0.0;
    const double cr = corner_population(in.rho, in.d);
    CHECK(e_inner_square(in) == doctest::Approx(4 * cr));
    CHECK(e_corner_region(in, 2) == doctest::Approx(0.75 * cr * 20.0));
    CHECK(e_corner_uplink(in, 2) == doctest::Approx(0.25 * cr * 200.0));
    const RingEnergy ring = e_ring_total(in, 1);
    CHECK(ring.member_tx == doctest::Approx(4 * (2 * cr - 1) * 1000.0));
    CHECK(ring.ch_tx == doctest::Approx((8 * cr + cr) * 10000.0));
}

TEST_CASE("sparse density is clamped and flagged")
{
    AnalyticInputs in = worked(0.3);
    in.rho = 0.001; // 2k rho d^2 = 0.556 < 1
    const RingEnergy ring = e_ring_total(in, 1);
    CHECK(ring.degenerate_density);
    CHECK(ring.member_tx == 0.0);
    CHECK(ring.ch_rx >= 0.0);
    CHECK(ring.total() > 0.0);
    CHECK_FALSE(e_ring_total(in, 2).degenerate_density);
}

TEST_CASE("monotone in density and linear in P")
{
    for (double p : {0.0, 0.3, 1.0}) {
        double prev = -1.0;
        for (double rho = 0.002; rho < 0.1; rho += 0.004) {
            AnalyticInputs in = worked(p);
            in.rho = rho;
            const double total = e_inner_square(in) + 4 * e_corner_region(in) + e_ring_total(in, 1).total() +
                                 e_ring_total(in, 2).total();
            CHECK(total > prev);
            prev = total;
        }
    }

    auto ring_at = [](double p) { return e_ring_total(worked(p), 1).total(); };
    const double slope = ring_at(1.0) - ring_at(0.0);
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        CHECK(ring_at(p) == doctest::Approx(ring_at(0.0) + p * slope).epsilon(1e-12));
        CHECK(std::abs(ring_at(p + 1e-9) - ring_at(p)) < 1e-9);
    }
}

TEST_CASE("analytic sweep")
{
    SweepSpec spec;
    spec.rho_values = {0.005, 0.01, 0.02};
    for (int i = 0; i <= 10; ++i) spec.p_values.push_back(i / 10.0);
    const auto rows = analytic_sweep(spec);
    REQUIRE(rows.size() == 33);

    const double d = 100.0 / 6.0;
    // First-order radio at d, independent of the library: 4000 x (50e-9 + 10e-12 d^2)
    const double t = 4000 * (50e-9 + 10e-12 * d * d);
    const double r = 4000 * 50e-9;
    const double da = 4000 * 5e-9;

    for (const AnalyticRow& row : rows) {
        CHECK(row.d == doctest::Approx(d));
        const double cr = row.rho * d * d;
        CHECK(row.e_is == doctest::Approx(4 * cr * t).epsilon(1e-12));
        CHECK(row.e_cr == doctest::Approx(2 * 4 * (1 - row.p) * cr * t).epsilon(1e-12));

        auto ring = [&](int k) {
            const double ncr = 2 * k * cr;
            const double members = std::max(ncr - 1, 0.0);
            const double share = row.p * cr;
            const double phi = da * (ncr + share);
            return 4 * members * t + (4 * ncr + 4 * share) * t + 4 * phi + (4 * members + 4 * share) * r;
        };
        CHECK(row.e_ms == doctest::Approx(ring(1)).epsilon(1e-12));
        CHECK(row.e_os == doctest::Approx(ring(2)).epsilon(1e-12));
        CHECK(row.e_total == doctest::Approx(row.e_is + row.e_cr + row.e_ms + row.e_os).epsilon(1e-12));
    }

    // Moving corner traffic to CHs trades one direct tx for one CH tx, plus rx and aggregation.
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].rho != rows[i + 1].rho) continue;
        const double cr = rows[i].rho * d * d;
        const double dp = rows[i + 1].p - rows[i].p;
        CHECK(rows[i + 1].e_total - rows[i].e_total == doctest::Approx(2 * 4 * cr * (r + 4000 * 5e-9) * dp));
    }

    spec.rings = 5;
    const auto five = analytic_sweep(spec);
    CHECK(five.front().d == doctest::Approx(10.0));
    CHECK(five.front().e_os > 0.0);

    spec.rings = 1;
    CHECK_THROWS_AS(analytic_sweep(spec), std::invalid_argument);
}

TEST_CASE("input validation")
{
    AnalyticInputs in = worked(1.5);
    CHECK_THROWS_AS(e_inner_square(in), std::invalid_argument);
    in.p_cr = 0.5;
    in.d = 0.0;
    CHECK_THROWS_AS(e_ring_total(in, 1), std::invalid_argument);
    in.d = 10.0;
    CHECK_THROWS_AS(e_ring_total(in, 0), std::invalid_argument);
    in.t_energy = nullptr;
    CHECK_THROWS_AS(e_corner_region(in), std::invalid_argument);
}
