#include "qdos/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "qdos/errors.hpp"
#include "qdos/units.hpp"

namespace qdos {

void validate(const OutOfFovParams& params) {
    if (!(params.kappa_low > 0.0) || !(params.kappa_low <= params.kappa_high) ||
        params.kappa_high > 1.0)
        throw std::domain_error("out-of-FOV kappa band must satisfy 0 < low <= high <= 1");
    if (!(params.kappa > 0.0) || params.kappa > 1.0)
        throw std::domain_error("out-of-FOV kappa must lie in (0, 1]");
}

void validate(const SatelliteSurface& surface) {
    if (!(surface.area > 0.0) || !(surface.albedo > 0.0) || surface.albedo > 1.0)
        throw std::domain_error("satellite surface requires S > 0 and albedo in (0, 1]");
    if (!(surface.area_low > 0.0) || !(surface.area_low <= surface.area_high))
        throw std::domain_error("satellite area band must satisfy 0 < low <= high");
    if (!(surface.albedo_low > 0.0) || !(surface.albedo_low <= surface.albedo_high) ||
        surface.albedo_high > 1.0)
        throw std::domain_error("albedo band must satisfy 0 < low <= high <= 1");
}

double out_of_fov_power(const BeamState& state, double initial_power,
                        const Receiver& receiver, double incidence_zenith, double kappa) {
    if (incidence_zenith < 0.0 || incidence_zenith > units::pi / 2.0)
        throw std::domain_error("out_of_fov_power: incidence zenith must lie in [0, pi/2]");
    const double c = std::cos(incidence_zenith);
    const double dr = receiver.aperture_diameter;
    const double sigma_rec = kappa * units::pi * dr * dr / 4.0 * c * c;
    return receiver.optical_loss * intensity(state, initial_power, 0.0) * sigma_rec;
}

double reflection_cross_section(const SatelliteSurface& surface, double zenith) {
    if (zenith < 0.0 || zenith > units::pi / 2.0)
        throw std::domain_error("reflection_cross_section: zenith must lie in [0, pi/2]");
    return surface.area * surface.albedo * std::sqrt(std::cos(zenith));
}

double ground_leo_ground_power(const BeamState& uplink_state, double initial_power,
                               const SatelliteSurface& surface,
                               const PathGeometry& uplink, const PathGeometry& downlink,
                               const Receiver& receiver, double wavelength,
                               const TransmittanceModel& model) {
    if (uplink.h1 != downlink.h1)
        throw config_error(
            "ground_leo_ground_power: uplink and downlink satellite altitudes differ");

    const double reflected = intensity(uplink_state, initial_power, 0.0) *
                             reflection_cross_section(surface, uplink.zenith);

    // Lambertian point scatterer: ground irradiance P cos(phi) / (pi L^2).
    const double range_down = slant_range(downlink);
    const double irradiance = reflected * std::cos(downlink.zenith) /
                              (units::pi * range_down * range_down) *
                              transmittance(downlink, wavelength, model);

    const double dr = receiver.aperture_diameter;
    return irradiance * units::pi * dr * dr / 4.0 * receiver.optical_loss;
}

} // namespace qdos
