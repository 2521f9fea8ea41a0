#pragma once

// Physical constants (SI, 2019 redefinition / CODATA 2018).
namespace cryoeo::constants {

inline constexpr double kHbar = 1.054571817e-34;       // J*s
inline constexpr double kBoltzmann = 1.380649e-23;     // J/K  (exact)
inline constexpr double kSpeedOfLight = 299792458.0;   // m/s  (exact)
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace cryoeo::constants
