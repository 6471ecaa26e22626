#include "drsim/analytic.hpp"

#include <stdexcept>

namespace drsim {

TxEnergyFn constant_tx_energy(double joules_per_packet)
{
    return [joules_per_packet](Link, int) { return joules_per_packet; };
}

void AnalyticInputs::validate() const
{
    if (!(rho >= 0.0)) throw std::invalid_argument("analytic: density must be non-negative");
    if (!(d > 0.0)) throw std::invalid_argument("analytic: distance factor must be positive");
    if (!(p_cr >= 0.0 && p_cr <= 1.0)) throw std::invalid_argument("analytic: P must lie in [0, 1]");
    if (!t_energy) throw std::invalid_argument("analytic: missing transmit-energy evaluator");
}

double inner_population(double rho, double d) { return 4.0 * rho * d * d; }
double corner_population(double rho, double d) { return rho * d * d; }
double ncr_population(double rho, double d, int ring) { return 2.0 * ring * rho * d * d; }

double e_inner_square(const AnalyticInputs& in)
{
    in.validate();
    return inner_population(in.rho, in.d) * in.t_energy(Link::InnerToBs, 0);
}

double e_corner_region(const AnalyticInputs& in, int ring)
{
    in.validate();
    return (1.0 - in.p_cr) * corner_population(in.rho, in.d) * in.t_energy(Link::CornerToBs, ring);
}

double e_corner_uplink(const AnalyticInputs& in, int ring)
{
    in.validate();
    return in.p_cr * corner_population(in.rho, in.d) * in.t_energy(Link::CornerToCh, ring);
}

RingEnergy e_ring_total(const AnalyticInputs& in, int ring)
{
    in.validate();
    if (ring < 1) throw std::invalid_argument("analytic: ring must be >= 1");

    RingEnergy out;
    out.ring = ring;
    const double ncr = ncr_population(in.rho, in.d, ring);
    const double cr_share = in.p_cr * corner_population(in.rho, in.d);

    double members = ncr - 1.0;
    if (members < 0.0) {
        members = 0.0;
        out.degenerate_density = true;
    }
    out.member_tx = 4.0 * members * in.t_energy(Link::MemberToCh, ring);
    out.ch_tx = (4.0 * ncr + 4.0 * cr_share) * in.t_energy(Link::ChToNextHop, ring) + 4.0 * in.phi;
    out.ch_rx = (4.0 * members + 4.0 * cr_share) * in.r_energy;
    return out;
}

RingEnergy e_middle_square_total(const AnalyticInputs& in) { return e_ring_total(in, 1); }
RingEnergy e_outer_square_total(const AnalyticInputs& in) { return e_ring_total(in, 2); }

std::vector<AnalyticRow> analytic_sweep(const SweepSpec& spec)
{
    if (spec.rings < 2) throw std::invalid_argument("analytic_sweep: need at least 2 squares");
    if (!(spec.field_length > 0.0)) throw std::invalid_argument("analytic_sweep: field length must be positive");

    const double d = spec.field_length / (2.0 * spec.rings);
    const double link = spec.distance > 0.0 ? spec.distance : d;
    const double t = tx_energy(spec.radio, spec.bits, link);
    const double r = rx_energy(spec.radio, spec.bits);
    const double bits = static_cast<double>(spec.bits);

    std::vector<AnalyticRow> rows;
    for (double rho : spec.rho_values) {
        for (double p : spec.p_values) {
            AnalyticInputs in{rho, d, p, constant_tx_energy(t), r, 0.0};
            AnalyticRow row{rho, d, p};
            row.e_is = e_inner_square(in);
            for (int k = 1; k < spec.rings; ++k) {
                row.e_cr += 4.0 * e_corner_region(in, k);
                in.phi = spec.radio.e_da() * bits * (ncr_population(rho, d, k) + p * corner_population(rho, d));
                const double ring_total = e_ring_total(in, k).total();
                (k == 1 ? row.e_ms : row.e_os) += ring_total;
            }
            row.e_total = row.e_is + row.e_cr + row.e_ms + row.e_os;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace drsim
