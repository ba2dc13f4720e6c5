#pragma once

#include <map>

#include "qdos/core.hpp"
#include "qdos/quadrature.hpp"

namespace qdos {

/// Hufnagel-Valley refractive-index structure profile.
/// Defaults are the HV5/7 values.
struct TurbulenceProfile {
    double ground_strength = 1.7e-14; // A0 [m^-2/3]
    double wind_rms = 21.0;           // v [m/s]
};

/// Cn^2(h) = 0.00594 (v/27) (1e-5 h)^10 e^(-h/1000)
///         + 2.7e-16 e^(-h/1500) + A0 e^(-h/100)
double cn2(double altitude_m, const TurbulenceProfile& profile);

/// Parametric replacement for a line-by-line transmittance code: per-wavelength
/// zenith transmittance T0 raised to airmass * column fraction, where the
/// extinction column is exponential with `extinction_scale_height` and
/// truncated at `ceiling`. Paths entirely above the ceiling are lossless.
struct TransmittanceModel {
    std::map<double, double> zenith_transmittance; // wavelength [m] -> T0
    double tau_transmitter = 1.0;
    double ceiling = 30e3;
    double extinction_scale_height = 6600.0;
};

/// Fraction of the vertical extinction column between h0 and h1.
/// 1 for a ground-to-space path, 0 above the ceiling.
double column_fraction(double h0, double h1, const TransmittanceModel& model);

/// tau_a = T0(lambda)^(sec(zenith) * column_fraction).
double transmittance(const PathGeometry& geometry, double wavelength,
                     const TransmittanceModel& model);

/// Zenith transmittance for a configured wavelength, matched within 0.1%.
double zenith_transmittance(double wavelength, const TransmittanceModel& model);

/// Installs T0 for a wavelength, replacing an existing entry that matches
/// within the same 0.1% tolerance rather than accumulating near-duplicates.
void set_zenith_transmittance(TransmittanceModel& model, double wavelength, double t0);

/// Path-weighted turbulence moment over altitude, truncated at `ceiling`:
///   downlink: mu_d = int Cn2(h) ((h - h0)/(h1 - h0))^(5/3) dh
///   uplink:   mu_u = int Cn2(h) (1 - (h - h0)/(h1 - h0))^(5/3) dh
/// The weight is largest where a phase screen has the longest remaining
/// path to act over, i.e. near the transmitter.
double turbulence_moment(const PathGeometry& geometry, const TurbulenceProfile& profile,
                         LinkDirection direction, QuadratureOptions quad = {},
                         double ceiling = 30e3);

} // namespace qdos
