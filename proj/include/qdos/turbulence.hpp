#pragma once

namespace qdos {

/// Adaptive-optics loop parameters for the residual-variance model.
struct AOConfig {
    double fitting_coefficient = 0.34; // kappa
    double actuator_spacing = 0.1;     // r_s [m]
    double control_bandwidth = 20.0;   // f_BW [Hz]
    double greenwood_frequency = 20.0; // f_G [Hz]
    double sensor_snr = 50.0;
};

/// Fried coherence length r0 = [0.431575 k^2 sec(zenith) mu]^(-3/5).
/// Scales as lambda^(6/5) and cos(zenith)^(3/5).
double fried_parameter(double wavelength, double zenith, double moment);

/// Uncorrected turbulence waist: w_t = (w_d / M) (D / r0)^(5/6).
double turbulence_waist(double w_diffraction, double beam_quality, double aperture,
                        double fried_length);

/// Residual wavefront variance sigma_ao^2 = 4/SNR^2
///   + kappa (r_s/r0)^(5/3) + (f_G/f_BW)^(5/3).
double ao_residual_variance(const AOConfig& ao, double fried_length);

/// S_ao = exp(-sigma_ao^2), in (0, 1].
double ao_strehl(double residual_variance);

/// AO-corrected turbulence waist from a Strehl factor:
/// w_t = w_d sqrt((1 - S) / S).
double turbulence_waist_from_strehl(double w_diffraction, double strehl);

/// AO-corrected turbulence waist for a given loop configuration and r0.
double turbulence_waist_ao(double w_diffraction, const AOConfig& ao, double fried_length);

} // namespace qdos
