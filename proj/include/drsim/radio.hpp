#pragma once

#include <cstdint>

namespace drsim {

using Bits = std::int64_t;

/// First-order radio model constants (SI units). The crossover distance d0
/// is derived from the two amplifier constants and never configured.
class RadioParams {
public:
    /// 50 nJ/bit electronics, 10 pJ/bit/m^2 free space, 0.0013 pJ/bit/m^4
    /// multipath, 5 nJ/bit/signal aggregation.
    RadioParams() : RadioParams(50e-9, 10e-12, 0.0013e-12, 5e-9) {}
    RadioParams(double e_elec, double e_fs, double e_mp, double e_da);

    double e_elec() const { return e_elec_; }
    double e_fs() const { return e_fs_; }
    double e_mp() const { return e_mp_; }
    double e_da() const { return e_da_; }
    double d0() const { return d0_; }

private:
    double e_elec_;
    double e_fs_;
    double e_mp_;
    double e_da_;
    double d0_;
};

/// Energy to transmit `bits` over `distance` metres. The multipath branch
/// applies from d0 upward.
double tx_energy(const RadioParams& radio, Bits bits, double distance);

double rx_energy(const RadioParams& radio, Bits bits);

/// Aggregation cost of fusing `signals` inputs of `bits_per_signal` each.
double agg_energy(const RadioParams& radio, Bits bits_per_signal, std::int64_t signals);

}  // namespace drsim
