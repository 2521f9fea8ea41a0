#pragma once

#include <string>
#include <vector>

#include "thermal.hpp"

namespace cryoeo {

// Dilution-refrigerator mixing-chamber model.  The default closed form
// captures the T^2-linear cooling-power curve of a dilution unit:
//
//   T_B(P) = sqrt(T0^2 + P / kappa_f)
//
// so an applied load P warms the stage from its unloaded base temperature
// T0.  A measured cooling curve can be supplied instead as a CSV table of
// (load, temperature) pairs, interpolated piecewise-linearly.
struct FridgeModel {
  double base_temp = 0.02;    // K, unloaded stage temperature
  double kappa_f = 0.04;      // W/K^2, cooling-power coefficient
  std::vector<double> table_P;  // W, strictly increasing (empty = closed form)
  std::vector<double> table_T;  // K, strictly increasing
};

// Stage temperature under a steady applied heat load [W].
[[nodiscard]] double boundary_temperature(const FridgeModel& fridge,
                                          double heat_load);

// Time-averaged load a pump schedule places on the stage.  Continuous
// drive deposits its full absorbed power; pulsed drive is scaled by the
// duty cycle.
[[nodiscard]] double average_heat_load(const PumpSchedule& sched);

// Load a cooling curve from CSV with header "P_W, T_K".  Both columns must
// be strictly increasing.  The returned model has base_temp set to the
// zero-load end of the table.
[[nodiscard]] FridgeModel load_fridge_table(const std::string& path);

}  // namespace cryoeo
