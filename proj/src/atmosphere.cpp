#include "qdos/atmosphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdos/errors.hpp"

namespace qdos {

double cn2(double altitude_m, const TurbulenceProfile& profile) {
    if (altitude_m < 0.0)
        throw std::domain_error("cn2: altitude must be nonnegative");
    const double h = altitude_m;
    return 0.00594 * (profile.wind_rms / 27.0) * std::pow(1e-5 * h, 10.0) * std::exp(-h / 1000.0)
         + 2.7e-16 * std::exp(-h / 1500.0)
         + profile.ground_strength * std::exp(-h / 100.0);
}

double column_fraction(double h0, double h1, const TransmittanceModel& model) {
    const double hs = model.extinction_scale_height;
    const double a = std::min(h0, model.ceiling);
    const double b = std::min(h1, model.ceiling);
    const double denom = 1.0 - std::exp(-model.ceiling / hs);
    return (std::exp(-a / hs) - std::exp(-b / hs)) / denom;
}

double zenith_transmittance(double wavelength, const TransmittanceModel& model) {
    for (const auto& [lambda, t0] : model.zenith_transmittance) {
        if (std::abs(lambda - wavelength) <= 1e-3 * wavelength)
            return t0;
    }
    throw config_error("atmosphere.T0: no zenith transmittance configured for wavelength " +
                       std::to_string(wavelength * 1e9) + " nm");
}

void set_zenith_transmittance(TransmittanceModel& model, double wavelength, double t0) {
    for (auto& [lambda, value] : model.zenith_transmittance) {
        if (std::abs(lambda - wavelength) <= 1e-3 * wavelength) {
            value = t0;
            return;
        }
    }
    model.zenith_transmittance[wavelength] = t0;
}

double transmittance(const PathGeometry& geometry, double wavelength,
                     const TransmittanceModel& model) {
    const double frac = column_fraction(geometry.h0, geometry.h1, model);
    if (frac <= 0.0)
        return 1.0; // exoatmospheric path
    const double t0 = zenith_transmittance(wavelength, model);
    const double airmass = 1.0 / std::cos(geometry.zenith);
    return std::pow(t0, airmass * frac);
}

namespace {

// The profile mixes scale heights of 0.1, 1.5 and ~10 km; integrating piecewise
// between fixed knots keeps each adaptive pass relative to a local magnitude.
constexpr double kKnots[] = {100.0, 300.0, 1e3, 3e3, 10e3, 20e3};

} // namespace

double turbulence_moment(const PathGeometry& geometry, const TurbulenceProfile& profile,
                         LinkDirection direction, QuadratureOptions quad, double ceiling) {
    if (!(geometry.h0 < geometry.h1))
        throw std::domain_error("turbulence_moment: requires h0 < h1");
    const double top = std::min(geometry.h1, ceiling);
    if (top <= geometry.h0)
        return 0.0;

    const double span = geometry.h1 - geometry.h0;
    const auto integrand = [&](double h) {
        const double xi = (h - geometry.h0) / span;
        const double weight = direction == LinkDirection::downlink ? xi : 1.0 - xi;
        return cn2(h, profile) * std::pow(weight, 5.0 / 3.0);
    };

    double total = 0.0;
    double lo = geometry.h0;
    for (double knot : kKnots) {
        if (knot <= lo || knot >= top)
            continue;
        total += adaptive_simpson(integrand, lo, knot, quad);
        lo = knot;
    }
    total += adaptive_simpson(integrand, lo, top, quad);
    return total;
}

} // namespace qdos
