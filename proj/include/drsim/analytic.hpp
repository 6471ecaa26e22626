#pragma once

#include "drsim/radio.hpp"

#include <functional>
#include <vector>

namespace drsim {

/// Link classes the closed forms price separately.
enum class Link { InnerToBs, CornerToBs, CornerToCh, MemberToCh, ChToNextHop };

/// Transmit energy (J per packet) for a link class in a given ring.
using TxEnergyFn = std::function<double(Link, int ring)>;

/// Every link priced at the same per-packet energy.
TxEnergyFn constant_tx_energy(double joules_per_packet);

struct AnalyticInputs {
    double rho = 0.0;    ///< nodes per m^2
    double d = 0.0;      ///< distance factor, metres
    double p_cr = 0.0;   ///< fraction of corner nodes that join a CH
    TxEnergyFn t_energy; ///< J per transmitted packet
    double r_energy = 0.0; ///< J per received packet
    double phi = 0.0;    ///< J aggregation charge per CH per round

    /// Throws std::invalid_argument unless rho >= 0, d > 0, 0 <= p_cr <= 1.
    void validate() const;
};

// Expected populations under uniform density.
double inner_population(double rho, double d);
double corner_population(double rho, double d);
double ncr_population(double rho, double d, int ring);

/// Central square: 4 rho d^2 direct transmissions to the BS.
double e_inner_square(const AnalyticInputs& in);

/// One corner region's direct-to-BS share, (1 - P) rho d^2 T.
double e_corner_region(const AnalyticInputs& in, int ring = 1);

/// Corner nodes that join a CH pay their own uplink, P rho d^2 T per corner.
/// The per-ring closed forms only carry the CH side of that traffic.
double e_corner_uplink(const AnalyticInputs& in, int ring = 1);

/// Termwise energy of the four NCRs of one ring.
struct RingEnergy {
    int ring = 0;
    double member_tx = 0.0; ///< 4 x (2k rho d^2 - 1) T
    double ch_tx = 0.0;     ///< (4 x 2k rho d^2 + 4 P rho d^2) T + 4 phi
    double ch_rx = 0.0;     ///< ((4 x 2k rho d^2 - 4) + 4 P rho d^2) R
    /// Set when an NCR expects fewer than one node; negative counts are
    /// clamped to zero.
    bool degenerate_density = false;

    double total() const { return member_tx + ch_tx + ch_rx; }
};

/// Ring k (1-based) NCRs have area 2k d^2; ring 1 is the middle square and
/// ring 2 the outer square of the three-square layout.
RingEnergy e_ring_total(const AnalyticInputs& in, int ring);
RingEnergy e_middle_square_total(const AnalyticInputs& in);
RingEnergy e_outer_square_total(const AnalyticInputs& in);

struct AnalyticRow {
    double rho = 0.0;
    double d = 0.0;
    double p = 0.0;
    double e_is = 0.0;    ///< central square
    double e_cr = 0.0;    ///< all 4(n-1) corner regions, direct share
    double e_ms = 0.0;    ///< ring 1
    double e_os = 0.0;    ///< rings 2..n-1
    double e_total = 0.0;
};

struct SweepSpec {
    double field_length = 100.0;
    int rings = 3;
    std::vector<double> rho_values;
    std::vector<double> p_values;
    double distance = 0.0; ///< representative link length; <= 0 selects d
    Bits bits = 4000;
    RadioParams radio;
};

/// Closed forms over the rho x P grid, T and R from the radio model at the
/// representative distance, phi = E_DA x bits x (own + expected inputs).
std::vector<AnalyticRow> analytic_sweep(const SweepSpec& spec);

}  // namespace drsim
