#include "qdos/beam.hpp"

#include <cmath>
#include <stdexcept>

#include "qdos/units.hpp"

namespace qdos {

double initial_waist(double aperture_diameter) {
    if (!(aperture_diameter > 0.0))
        throw std::domain_error("initial_waist: aperture must be positive");
    return aperture_diameter / (2.0 * std::sqrt(2.0));
}

double diffraction_waist(double range, double w0, double wavelength, double beam_quality,
                         double focal_range) {
    if (range < 0.0)
        throw std::domain_error("diffraction_waist: range must be nonnegative");
    const double k = 2.0 * units::pi / wavelength;
    const double far = beam_quality * range / (k * w0);
    const double focus = std::isinf(focal_range) ? 1.0 : 1.0 - range / focal_range;
    return std::sqrt(far * far + w0 * w0 * focus * focus);
}

double jitter_waist(double range, double theta_rms) {
    if (range < 0.0)
        throw std::domain_error("jitter_waist: range must be nonnegative");
    return std::sqrt(2.0) * theta_rms * range;
}

double total_waist(double w_diffraction, double w_turbulence, double w_jitter) {
    return std::sqrt(w_diffraction * w_diffraction + w_turbulence * w_turbulence +
                     w_jitter * w_jitter);
}

double pointing_factor(double w_turbulence, double pointing_variance) {
    if (pointing_variance == 0.0)
        return 1.0;
    if (w_turbulence == 0.0)
        return 0.0; // degenerate: finite pointing spread with no turbulence waist
    const double wt2 = w_turbulence * w_turbulence;
    return wt2 / (wt2 + 4.0 * pointing_variance * pointing_variance);
}

double strehl_total(std::span<const double> factors) {
    double sum = 0.0;
    for (double s : factors) {
        if (!(s > 0.0) || s > 1.0)
            throw std::domain_error("strehl_total: factors must lie in (0, 1]");
        sum += 1.0 / s - 1.0;
    }
    return 1.0 / (1.0 + sum);
}

double thermal_blooming_strehl(double distortion_number) {
    if (distortion_number < 0.0)
        throw std::domain_error("thermal_blooming_strehl: N_D must be nonnegative");
    return 1.0 / (1.0 + 0.0625 * distortion_number * distortion_number);
}

double intensity(const BeamState& state, double initial_power, double radial_offset) {
    const double w2 = state.w_total * state.w_total;
    return 2.0 * initial_power / (units::pi * w2) *
           std::exp(-2.0 * radial_offset * radial_offset / w2) * state.tau_total *
           state.strehl_total;
}

double received_power_in_fov(const BeamState& state, double initial_power,
                             const Receiver& receiver) {
    const double w2 = state.w_total * state.w_total;
    const double dr = receiver.aperture_diameter;
    const double capture = 1.0 - std::exp(-dr * dr / (2.0 * w2));
    return receiver.optical_loss * initial_power * capture * state.tau_total *
           state.strehl_total;
}

} // namespace qdos
