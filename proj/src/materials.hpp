#pragma once

#include <string>

namespace cryoeo {

// Cryogenic material described by power laws valid in the sub-kelvin regime:
//   thermal conductivity  k(T) = a_k * T^p      [W/m/K]
//   specific heat         c(T) = a_c * T^q      [J/kg/K]
// Both laws are pure functions of temperature; no hysteresis or anisotropy.
struct MaterialModel {
  std::string name;
  double conductivity_coeff = 0.0;   // a_k, units W/m/K^(p+1)
  double conductivity_exponent = 0.0;  // p
  double heat_capacity_coeff = 0.0;  // a_c, units J/kg/K^(q+1)
  double heat_capacity_exponent = 0.0;  // q
  double density = 0.0;              // kg/m^3
  double valid_max_temp = 4.0;       // K; evaluation above this logs a warning
  std::string note;                  // provenance label, e.g. metal purity
};

// Built-in definitions.  Densities are standard handbook values; the fit
// coefficients are the low-temperature laws for each material.
[[nodiscard]] MaterialModel linbo3();
[[nodiscard]] MaterialModel copper();

// k(T); rejects T < 0, warns above valid_max_temp.
[[nodiscard]] double conductivity(const MaterialModel& m, double T);

// rho * c(T); rejects T < 0.
[[nodiscard]] double volumetric_heat_capacity(const MaterialModel& m, double T);

// u(T) = integral of k from 0 to T = a_k * T^(p+1)/(p+1); strictly increasing.
// This is the transformed variable in which the steady diffusion problem is
// linear (Kirchhoff transformation).
[[nodiscard]] double kirchhoff_potential(const MaterialModel& m, double T);

// Inverse of kirchhoff_potential; round-trips to 1e-12 relative accuracy.
[[nodiscard]] double kirchhoff_inverse(const MaterialModel& m, double u);

}  // namespace cryoeo
