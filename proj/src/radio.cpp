#include "drsim/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace drsim {

RadioParams::RadioParams(double e_elec, double e_fs, double e_mp, double e_da)
    : e_elec_(e_elec), e_fs_(e_fs), e_mp_(e_mp), e_da_(e_da)
{
    for (double v : {e_elec, e_fs, e_mp, e_da}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("RadioParams: energy constants must be positive and finite");
        }
    }
    d0_ = std::sqrt(e_fs_ / e_mp_);
}

double tx_energy(const RadioParams& radio, Bits bits, double distance)
{
    if (bits < 0 || !(distance >= 0.0)) {
        throw std::invalid_argument("tx_energy: negative bits or distance");
    }
    const double b = static_cast<double>(bits);
    if (distance < radio.d0()) {
        return b * (radio.e_elec() + radio.e_fs() * distance * distance);
    }
    const double d2 = distance * distance;
    return b * (radio.e_elec() + radio.e_mp() * d2 * d2);
}

double rx_energy(const RadioParams& radio, Bits bits)
{
    if (bits < 0) {
        throw std::invalid_argument("rx_energy: negative bits");
    }
    return static_cast<double>(bits) * radio.e_elec();
}

double agg_energy(const RadioParams& radio, Bits bits_per_signal, std::int64_t signals)
{
    if (bits_per_signal < 0 || signals < 0) {
        throw std::invalid_argument("agg_energy: negative bits or signal count");
    }
    return radio.e_da() * static_cast<double>(bits_per_signal) * static_cast<double>(signals);
}

}  // namespace drsim
