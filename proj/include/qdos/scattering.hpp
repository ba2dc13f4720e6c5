#pragma once

#include "qdos/atmosphere.hpp"
#include "qdos/beam.hpp"
#include "qdos/core.hpp"

namespace qdos {

/// Suppression of off-axis light internally scattered into the receiver.
struct OutOfFovParams {
    double kappa = 1e-7;
    double kappa_low = 1e-9;
    double kappa_high = 1e-6;
};

/// Reflecting satellite surface for the ground-satellite-ground bounce.
struct SatelliteSurface {
    double area = 4.0;   // S [m^2]
    double albedo = 1.0; // epsilon
    double area_low = 0.01;
    double area_high = 4.0;
    double albedo_low = 0.01;
    double albedo_high = 1.0;
};

void validate(const OutOfFovParams& params);
void validate(const SatelliteSurface& surface);

/// Out-of-FOV received power P = tau_r I(z, r=0) sigma_rec with the
/// in-scattering profile sigma_rec = kappa (pi D_r^2 / 4) cos^2(phi).
double out_of_fov_power(const BeamState& state, double initial_power,
                        const Receiver& receiver, double incidence_zenith, double kappa);

/// Reflection cross-section sigma_sat = S epsilon sqrt(cos(phi)).
double reflection_cross_section(const SatelliteSurface& surface, double zenith);

/// Ground-satellite-ground chain: on-axis uplink intensity at the satellite,
/// reflection off sigma_sat, Lambertian spread over the downlink range, then
/// aperture capture with the downlink atmospheric loss.
double ground_leo_ground_power(const BeamState& uplink_state, double initial_power,
                               const SatelliteSurface& surface,
                               const PathGeometry& uplink, const PathGeometry& downlink,
                               const Receiver& receiver, double wavelength,
                               const TransmittanceModel& model);

} // namespace qdos
