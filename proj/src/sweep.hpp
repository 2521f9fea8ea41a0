#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "device.hpp"
#include "fridge.hpp"
#include "materials.hpp"
#include "mesh.hpp"
#include "quantum.hpp"
#include "thermal.hpp"

namespace cryoeo {

// Mesh resolution knobs for the chain solver; zeros pick defaults scaled
// to the device (50 radial cells, one axial cell per 50 um of thickness).
struct MeshParams {
  int nr = 0;
  int nz = 0;
  double refine_source = 3.0;
};

[[nodiscard]] AxiMesh make_chain_mesh(const DeviceSpec& spec,
                                      const MeshParams& params);

// Everything the power -> heating -> occupancy -> fidelity chain needs.
struct ChainContext {
  DeviceSpec device;
  MaterialModel material = linbo3();
  FridgeModel fridge;
  ModeSystem modes;
  QuantumState state;
  PumpSchedule pump;
  MeshParams mesh;
  bool no_heating = false;  // freeze every temperature at the fridge base
};

// One evaluated chain point.  The field order matches the CSV schema.
struct SweepRow {
  double P_o = 0.0;     // optical drive power [W]
  double eta_mw = 0.0;  // microwave extraction efficiency in effect
  double T_B = 0.0;     // contact boundary temperature [K]
  double T_av = 0.0;    // mode-volume average device temperature [K]
  double n_bar = 0.0;   // thermal occupancy entering the microwave mode
  double C = 0.0;       // electro-optic cooperativity
  double F = 0.0;       // conversion fidelity
  std::string error;    // non-empty if this point failed to evaluate
};

// Steady unit-power temperature profiles are expensive to build and depend
// only on the geometry and material, so they are cached and shared across
// sweep points and worker threads.
class ThermalCache {
 public:
  const SteadyProfile& profile(const DeviceSpec& spec,
                               const MaterialModel& mat,
                               const MeshParams& params);

 private:
  std::map<std::string, SteadyProfile> profiles_;
  std::mutex mutex_;
};

// Evaluate the full chain at drive power P_o.  With eta_override >= 0 the
// microwave external coupling is retuned so the extraction efficiency
// equals eta_override at fixed intrinsic loss; eta_override = 1 is the
// infinitely overcoupled limit, where the cooperativity vanishes.
[[nodiscard]] SweepRow evaluate_chain(const ChainContext& ctx,
                                      ThermalCache& cache, double P_o,
                                      double eta_override = -1.0);

// Sweep request.  `values` is the grid of the chosen variable: powers [W],
// extraction efficiencies, or device thicknesses [m].
struct SweepSpec {
  enum class Variable { Power, Coupling, Thickness };
  Variable variable = Variable::Power;
  std::vector<double> values;
  double fixed_power = 1e-3;  // drive power for coupling/thickness sweeps
  double fixed_eta = -1.0;    // eta override for power/thickness sweeps
  int jobs = 0;               // worker threads; 0 = hardware concurrency
};

// Evaluate a grid of chain points.  Rows come back in grid order and are
// bitwise independent of the number of worker threads.
[[nodiscard]] std::vector<SweepRow> run_sweep(const ChainContext& ctx,
                                              ThermalCache& cache,
                                              const SweepSpec& spec);

// Generic one-dimensional maximizer: a coarse scan brackets the best
// sample, then golden-section search refines it.  on_boundary reports an
// edge-of-interval maximum.
struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
  bool on_boundary = false;
};

[[nodiscard]] ScalarMax maximize_scalar(const std::function<double(double)>& f,
                                        double lo, double hi,
                                        int coarse_points = 33,
                                        double tol = 1e-6);

// Fidelity optimum over power (at fixed coupling) or over coupling (at
// fixed power).  The returned row re-evaluates the chain at the optimum.
struct OptimumResult {
  double argument = 0.0;
  SweepRow row;
  bool on_boundary = false;
};

[[nodiscard]] OptimumResult maximize_fidelity(const ChainContext& ctx,
                                              ThermalCache& cache,
                                              SweepSpec::Variable variable,
                                              double lo, double hi,
                                              double fixed_power,
                                              double fixed_eta,
                                              int coarse_points = 33,
                                              double tol = 1e-4);

// Write rows with the fixed seven-column header.
void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path);

}  // namespace cryoeo
