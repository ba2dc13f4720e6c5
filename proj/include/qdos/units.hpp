#pragma once

#include <numbers>

namespace qdos::units {

inline constexpr double pi = std::numbers::pi;

constexpr double deg(double degrees) { return degrees * pi / 180.0; }
constexpr double urad(double microradians) { return microradians * 1e-6; }
constexpr double km(double kilometres) { return kilometres * 1e3; }
constexpr double kw(double kilowatts) { return kilowatts * 1e3; }
constexpr double nm(double nanometres) { return nanometres * 1e-9; }

} // namespace qdos::units
