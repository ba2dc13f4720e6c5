#pragma once

#include <vector>

#include "qdos/config.hpp"

namespace qdos {

/// One suppression constraint: received-power ratio between `zenith` and a
/// zenith path, for a ground-to-satellite link at `altitude`.
struct CalibrationTarget {
    double altitude;
    double zenith;
    double ratio;
};

/// The published 60-degree suppression factors: 0.37 at 1000 km, 0.58 at 500 km.
std::vector<CalibrationTarget> default_calibration_targets();

struct CalibrationAchieved {
    CalibrationTarget target;
    double achieved;
};

struct CalibrationResult {
    double wavelength = 0.0;
    double t0 = 1.0;
    double residual = 0.0; // sum of squared ratio deviations at the fit
    std::vector<CalibrationAchieved> achieved;
};

/// Fits the zenith transmittance T0(lambda) so the modelled suppression
/// ratios match the targets in least squares, by scalar search on (0.5, 1].
///
/// The probe link is a diffraction-limited reference: a ground LWS against
/// the satellite receiver with jitter zeroed and the turbulence waist fully
/// corrected, isolating the one fitted atmospheric parameter. Infeasible
/// targets clamp at the search bounds; the result always reports the
/// achieved ratios and residual.
CalibrationResult calibrate_transmittance(const std::vector<CalibrationTarget>& targets,
                                          double wavelength, const Config& config);

/// Returns a copy of `config` with the fitted T0 installed.
Config apply_calibration(const Config& config, const CalibrationResult& result);

} // namespace qdos
