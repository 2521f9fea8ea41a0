#include "materials.hpp"

#include <cmath>

#include "errors.hpp"
#include "logging.hpp"

namespace cryoeo {

namespace {

void check_temperature(const MaterialModel& m, double T) {
  if (!(T >= 0.0)) {
    raise(ErrorCode::InvalidArgument, "materials",
          "negative temperature " + std::to_string(T) + " K for material '" +
              m.name + "'");
  }
  if (T > m.valid_max_temp) {
    log::warn("materials: evaluating '" + m.name + "' at " +
              std::to_string(T) + " K, above the fitted range (" +
              std::to_string(m.valid_max_temp) + " K); extrapolating");
  }
}

}  // namespace

MaterialModel linbo3() {
  MaterialModel m;
  m.name = "linbo3";
  m.conductivity_coeff = 4.0;       // k = 4 T^3
  m.conductivity_exponent = 3.0;
  m.heat_capacity_coeff = 2.705e-4;  // c = 2.705e-4 T^3
  m.heat_capacity_exponent = 3.0;
  m.density = 4640.0;
  m.valid_max_temp = 4.0;
  m.note = "congruent single crystal";
  return m;
}

MaterialModel copper() {
  MaterialModel m;
  m.name = "copper";
  m.conductivity_coeff = 500.0;     // k = 500 T
  m.conductivity_exponent = 1.0;
  m.heat_capacity_coeff = 0.01;     // c = 0.01 T
  m.heat_capacity_exponent = 1.0;
  m.density = 8960.0;
  m.valid_max_temp = 4.0;
  m.note = "conductivity RRR=100, heat capacity RRR=30 (purity labels only)";
  return m;
}

double conductivity(const MaterialModel& m, double T) {
  check_temperature(m, T);
  if (T == 0.0) return 0.0;
  return m.conductivity_coeff * std::pow(T, m.conductivity_exponent);
}

double volumetric_heat_capacity(const MaterialModel& m, double T) {
  check_temperature(m, T);
  if (T == 0.0) return 0.0;
  return m.density * m.heat_capacity_coeff *
         std::pow(T, m.heat_capacity_exponent);
}

double kirchhoff_potential(const MaterialModel& m, double T) {
  check_temperature(m, T);
  if (T == 0.0) return 0.0;
  const double p1 = m.conductivity_exponent + 1.0;
  return m.conductivity_coeff * std::pow(T, p1) / p1;
}

double kirchhoff_inverse(const MaterialModel& m, double u) {
  if (!(u >= 0.0)) {
    raise(ErrorCode::InvalidArgument, "materials",
          "negative transformed potential " + std::to_string(u));
  }
  if (u == 0.0) return 0.0;
  const double p1 = m.conductivity_exponent + 1.0;
  return std::pow(p1 * u / m.conductivity_coeff, 1.0 / p1);
}

}  // namespace cryoeo
