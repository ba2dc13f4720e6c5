#include "qdos/turbulence.hpp"

#include <cmath>
#include <stdexcept>

#include "qdos/units.hpp"

namespace qdos {

double fried_parameter(double wavelength, double zenith, double moment) {
    if (!(moment > 0.0))
        throw std::domain_error("fried_parameter: turbulence moment must be positive");
    if (!(wavelength > 0.0))
        throw std::domain_error("fried_parameter: wavelength must be positive");
    if (!(zenith >= 0.0) || !(zenith < units::pi / 2.0))
        throw std::domain_error("fried_parameter: zenith must lie in [0, pi/2)");
    const double k = 2.0 * units::pi / wavelength;
    const double airmass = 1.0 / std::cos(zenith);
    return std::pow(0.431575 * k * k * airmass * moment, -3.0 / 5.0);
}

double turbulence_waist(double w_diffraction, double beam_quality, double aperture,
                        double fried_length) {
    if (!(fried_length > 0.0))
        throw std::domain_error("turbulence_waist: Fried length must be positive");
    if (std::isinf(fried_length))
        return 0.0;
    return (w_diffraction / beam_quality) * std::pow(aperture / fried_length, 5.0 / 6.0);
}

double ao_residual_variance(const AOConfig& ao, double fried_length) {
    if (!(fried_length > 0.0))
        throw std::domain_error("ao_residual_variance: Fried length must be positive");
    const double sensing = 4.0 / (ao.sensor_snr * ao.sensor_snr);
    const double fitting =
        ao.fitting_coefficient * std::pow(ao.actuator_spacing / fried_length, 5.0 / 3.0);
    const double temporal = std::pow(ao.greenwood_frequency / ao.control_bandwidth, 5.0 / 3.0);
    return sensing + fitting + temporal;
}

double ao_strehl(double residual_variance) {
    if (residual_variance < 0.0)
        throw std::domain_error("ao_strehl: variance must be nonnegative");
    return std::exp(-residual_variance);
}

double turbulence_waist_from_strehl(double w_diffraction, double strehl) {
    if (!(strehl > 0.0) || strehl > 1.0)
        throw std::domain_error("turbulence_waist_from_strehl: Strehl must lie in (0, 1]");
    return w_diffraction * std::sqrt((1.0 - strehl) / strehl);
}

double turbulence_waist_ao(double w_diffraction, const AOConfig& ao, double fried_length) {
    return turbulence_waist_from_strehl(w_diffraction,
                                        ao_strehl(ao_residual_variance(ao, fried_length)));
}

} // namespace qdos
