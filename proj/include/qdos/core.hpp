#pragma once

#include <limits>
#include <string>

namespace qdos {

/// Beam travel direction relative to the ground.
enum class LinkDirection { uplink, downlink };

/// Slant path between two altitudes, plane-parallel Earth.
///
/// h0 is always the lower endpoint and h1 the upper one; the zenith angle
/// is measured at the lower endpoint. Whether the beam travels up or down
/// the path is carried separately in `direction`.
struct PathGeometry {
    PathGeometry(double h0_m, double h1_m, double zenith_rad, LinkDirection dir);

    double h0;
    double h1;
    double zenith;
    LinkDirection direction;
};

/// Slant range L = (h1 - h0) / cos(zenith).
double slant_range(const PathGeometry& geometry);

/// Full-cone FOV diameter d = phi_fov * distance (small-angle).
double fov_diameter(double fov_angle_rad, double distance_m);

enum class PlatformKind {
    ground_fixed,
    ground_mobile,
    drone,
    plane,
    stratospheric,
    leo_sat,
    geo_sat,
};

struct PowerEnvelope {
    double min_w;
    double max_w;
};

/// Carrier of a laser or receiver. Speed is metadata only.
struct Platform {
    PlatformKind kind;
    double altitude;
    double speed;
    PowerEnvelope power;
};

/// Fixed platform presets: ground 1 kW-1 MW, drone 5 km 0.1-2 kW,
/// plane 10 km 1-100 kW, stratospheric 30 km 0.1-2 kW, LEO 500 km
/// 0.1-2 kW, GEO 35,800 km with the LEO power envelope.
Platform platform_preset(PlatformKind kind);

bool is_ground(PlatformKind kind);

std::string to_string(PlatformKind kind);

/// Quantum receiver front end. `optical_loss` is the fraction of the power
/// collected by the aperture that reaches the detector.
struct Receiver {
    double aperture_diameter;
    double optical_loss = 1.0;
    double fov_angle = 10e-6;
};

struct LaserSource {
    double power;
    double aperture_diameter;
    double wavelength;
    double beam_quality = 1.0;
    double focal_range = std::numeric_limits<double>::infinity();
    bool has_adaptive_optics = false;
    double pointing_variance = 0.0;
};

void validate(const Receiver& receiver);
void validate(const LaserSource& source);

} // namespace qdos
