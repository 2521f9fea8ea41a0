#pragma once

#include <string>
#include <utility>
#include <vector>

#include "materials.hpp"
#include "mesh.hpp"

namespace cryoeo {

// Optical-pump heat deposition schedule.  The dissipated power rises
// exponentially with the optical-mode build-up time tau for cw and pulsed
// operation; "instant" applies the full power from t = 0 (used to expose the
// bare diffusion timescale).  duty only matters for the fridge heat-load
// accounting of pulsed operation, never for the in-pulse temperature field.
struct PumpSchedule {
  enum class Mode { Cw, Pulsed, Instant };
  Mode mode = Mode::Cw;
  double P_o = 1e-3;          // pump power [W]
  double tau = 1e-6;          // optical rise time [s]
  double duty = 0.01;         // pulsed duty cycle, (0, 1]
  double heat_fraction = 1.0; // share of pump power dissipated in the source
};

struct SolverConfig {
  double dt_initial = 1e-9;   // s
  double dt_max = 0.0;        // s; 0 = auto (tau/10, or end_time/50 instant)
  double end_time = 20e-6;    // s
  double newton_tol = 1e-10;  // relative residual
  int newton_max_iter = 12;
  double steady_tol = 1e-4;   // relative; saturation / consistency checks
};

// Dirichlet temperatures per contact surface.  The standard pipeline uses a
// single stage temperature for all three; the split form supports analytic
// verification cases with distinct plate temperatures.
struct BoundaryTemps {
  double bottom = 0.02;
  double top = 0.02;
  double side = 0.02;
};

struct TemperatureHistory {
  std::vector<double> times;      // s, strictly increasing, starts at 0
  std::vector<double> mode_avg;   // K, microwave-annulus volume average
  // (time, full temperature field) pairs at the requested snapshot times.
  std::vector<std::pair<double, std::vector<double>>> snapshots;
};

// Instantaneous dissipated power [W], before the heat_fraction scaling that
// the solver applies when forming the volumetric source density.
[[nodiscard]] double source_power(double t, const PumpSchedule& sched);

// Steady temperature field for uniform boundary temperature T_B and constant
// injected power P_o * heat_fraction.  The diffusion operator is linear in
// the transformed potential, so this is a single sparse solve.
[[nodiscard]] std::vector<double> solve_steady(const AxiMesh& mesh,
                                               const MaterialModel& mat,
                                               double T_B, double P_o,
                                               double heat_fraction = 1.0);

// Same, with independent per-surface boundary temperatures.
[[nodiscard]] std::vector<double> solve_steady_bc(const AxiMesh& mesh,
                                                  const MaterialModel& mat,
                                                  const BoundaryTemps& bc,
                                                  double P_o,
                                                  double heat_fraction = 1.0);

// Fully implicit (backward-difference) integration of
//   rho c(T) dT/dt = div(k(T) grad T) + q(t)
// in the transformed potential, Newton iteration per step, adaptive dt
// (doubling on fast convergence, halving on failure, capped at dt_max).
// History is sampled at every accepted step; snapshots are recorded at the
// first accepted step past each requested time.
[[nodiscard]] TemperatureHistory solve_transient(
    const AxiMesh& mesh, const MaterialModel& mat, double boundary_T,
    const PumpSchedule& sched, const SolverConfig& cfg,
    const std::vector<double>& snapshot_times = {});

// First time the mode average crosses start + fraction * (end - start), by
// linear interpolation.  Requires the history to have saturated (last two
// samples within steady_tol of the total excursion); throws NotSaturated.
[[nodiscard]] double rise_time(const TemperatureHistory& hist, double fraction,
                               double steady_tol = 1e-3);

// Diffusive equilibration estimate rho*c(T_ref)*d^2 / k(T_ref) across a slab
// of half-thickness d.  For materials whose conductivity and heat-capacity
// laws share the same exponent the ratio is temperature-independent.
[[nodiscard]] double characteristic_diffusion_time(const MaterialModel& mat,
                                                   double half_thickness,
                                                   double T_ref = 0.1);

// Net conductive heat flow [W] out through the Dirichlet contacts for a given
// temperature field; equals the injected power at steady state.
[[nodiscard]] double contact_heat_flow(const AxiMesh& mesh,
                                       const MaterialModel& mat,
                                       const std::vector<double>& T_field,
                                       const BoundaryTemps& bc);

// Reduced steady solution for fast parameter sweeps: the transformed
// potential per watt of injected heat, restricted to the microwave annulus.
// Because the steady problem is linear in the potential, the mode-average
// temperature at any (P, T_B) follows from this single profile exactly --
// no interpolation in power is needed.
struct SteadyProfile {
  std::vector<double> annulus_phi;     // potential per watt, annulus cells
  std::vector<double> annulus_weight;  // cell volumes, annulus cells
  double weight_sum = 0.0;
  MaterialModel material;
};

[[nodiscard]] SteadyProfile steady_unit_profile(const AxiMesh& mesh,
                                                const MaterialModel& mat);

[[nodiscard]] double mode_average_temp(const SteadyProfile& prof,
                                       double P_heat, double T_B);

// CSV writers: history -> (t_s, T_av_K); snapshot -> (r_m, z_m, T_K).
void write_history_csv(const TemperatureHistory& hist, const std::string& path);
void write_snapshot_csv(const AxiMesh& mesh, const std::vector<double>& T_field,
                        const std::string& path);

}  // namespace cryoeo
