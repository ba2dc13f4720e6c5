#pragma once

#include <limits>
#include <span>

#include "qdos/core.hpp"

namespace qdos {

/// Target-plane beam description: every waist component, transmittance
/// factor and Strehl factor produced by the propagation chain.
/// Invariant: w_tot^2 = w_d^2 + w_t^2 + w_j^2.
struct BeamState {
    double range = 0.0; // z [m]
    double w0 = 0.0;
    double w_diffraction = 0.0;
    double w_turbulence = 0.0;
    double w_jitter = 0.0;
    double w_total = 0.0;

    double fried_length = std::numeric_limits<double>::infinity();
    double moment = 0.0;

    double tau_atmosphere = 1.0;
    double tau_transmitter = 1.0;
    double tau_pointing = 1.0;
    double tau_total = 1.0;

    double strehl_ao = 1.0;
    double strehl_thermal = 1.0;
    double strehl_total = 1.0;

    double theta_rms = 2.0e-6;
    double distortion_number = 0.0;
};

/// Launch waist from the transmitter aperture: w0 = D / (2 sqrt(2)).
double initial_waist(double aperture_diameter);

/// Gaussian diffraction waist:
/// w_d^2 = M^2 z^2 / (k^2 w0^2) + w0^2 (1 - z/F)^2.
double diffraction_waist(double range, double w0, double wavelength, double beam_quality,
                         double focal_range = std::numeric_limits<double>::infinity());

/// Jitter waist w_j = sqrt(2) theta_rms z.
double jitter_waist(double range, double theta_rms);

/// Quadrature sum of the waist components.
double total_waist(double w_diffraction, double w_turbulence, double w_jitter);

/// Pointing-error transmittance tau_p = w_t^2 / (w_t^2 + 4 sigma_p^2).
/// Perfect tracking (sigma_p = 0) gives 1; a zero waist with a finite
/// pointing spread is degenerate and gives 0.
double pointing_factor(double w_turbulence, double pointing_variance);

/// Combined Strehl ratio S_tot = 1 / (1 + sum(1/S_i - 1)); never exceeds
/// the smallest factor.
double strehl_total(std::span<const double> factors);

/// Thermal-blooming Strehl S_TB = 1 / (1 + 0.0625 N_D^2).
double thermal_blooming_strehl(double distortion_number);

/// Target-plane intensity at radial offset r:
/// I = (2 P / (pi w_tot^2)) exp(-2 r^2 / w_tot^2) tau_tot S_tot.
double intensity(const BeamState& state, double initial_power, double radial_offset);

/// Power collected by an on-axis aperture, equal to the radial integral of
/// the intensity profile over the aperture disc times the receiver loss:
/// P = tau_r P (1 - exp(-D_r^2 / (2 w_tot^2))) tau_tot S_tot.
double received_power_in_fov(const BeamState& state, double initial_power,
                             const Receiver& receiver);

} // namespace qdos
