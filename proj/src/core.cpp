#include "qdos/core.hpp"

#include <cmath>
#include <stdexcept>

#include "qdos/units.hpp"

namespace qdos {

PathGeometry::PathGeometry(double h0_m, double h1_m, double zenith_rad, LinkDirection dir)
    : h0(h0_m), h1(h1_m), zenith(zenith_rad), direction(dir) {
    if (!(h0 >= 0.0) || !(h1 > h0))
        throw std::domain_error("path geometry requires 0 <= h0 < h1");
    if (!(zenith >= 0.0) || !(zenith < units::pi / 2.0))
        throw std::domain_error("zenith angle must lie in [0, pi/2)");
}

double slant_range(const PathGeometry& geometry) {
    return (geometry.h1 - geometry.h0) / std::cos(geometry.zenith);
}

double fov_diameter(double fov_angle_rad, double distance_m) {
    if (fov_angle_rad < 0.0 || distance_m < 0.0)
        throw std::domain_error("fov_diameter requires nonnegative angle and distance");
    return fov_angle_rad * distance_m;
}

Platform platform_preset(PlatformKind kind) {
    switch (kind) {
    case PlatformKind::ground_fixed:
        return {kind, 0.0, 0.0, {1e3, 1e6}};
    case PlatformKind::ground_mobile:
        return {kind, 0.0, 25.0, {1e3, 1e6}};
    case PlatformKind::drone:
        return {kind, 5e3, 150.0 / 3.6, {100.0, 2e3}};
    case PlatformKind::plane:
        return {kind, 10e3, 830.0 / 3.6, {1e3, 1e5}};
    case PlatformKind::stratospheric:
        return {kind, 30e3, 50.0 / 3.6, {100.0, 2e3}};
    case PlatformKind::leo_sat:
        return {kind, 500e3, 7778.0, {100.0, 2e3}};
    case PlatformKind::geo_sat:
        return {kind, 35800e3, 0.0, {100.0, 2e3}};
    }
    throw std::logic_error("unknown platform kind");
}

bool is_ground(PlatformKind kind) {
    return kind == PlatformKind::ground_fixed || kind == PlatformKind::ground_mobile;
}

std::string to_string(PlatformKind kind) {
    switch (kind) {
    case PlatformKind::ground_fixed: return "ground_fixed";
    case PlatformKind::ground_mobile: return "ground_mobile";
    case PlatformKind::drone: return "drone";
    case PlatformKind::plane: return "plane";
    case PlatformKind::stratospheric: return "stratospheric";
    case PlatformKind::leo_sat: return "leo_sat";
    case PlatformKind::geo_sat: return "geo_sat";
    }
    return "unknown";
}

void validate(const Receiver& receiver) {
    if (!(receiver.aperture_diameter > 0.0))
        throw std::domain_error("receiver aperture must be positive");
    if (!(receiver.optical_loss > 0.0) || receiver.optical_loss > 1.0)
        throw std::domain_error("receiver optical loss must lie in (0, 1]");
    if (!(receiver.fov_angle > 0.0))
        throw std::domain_error("receiver FOV angle must be positive");
}

void validate(const LaserSource& source) {
    if (!(source.power > 0.0))
        throw std::domain_error("laser power must be positive");
    if (!(source.aperture_diameter > 0.0))
        throw std::domain_error("laser aperture must be positive");
    if (!(source.wavelength > 0.0))
        throw std::domain_error("wavelength must be positive");
    if (!(source.beam_quality >= 1.0))
        throw std::domain_error("beam quality factor must be >= 1");
    if (!(source.focal_range > 0.0))
        throw std::domain_error("focal range must be positive");
    if (source.pointing_variance < 0.0)
        throw std::domain_error("pointing variance must be nonnegative");
}

} // namespace qdos
