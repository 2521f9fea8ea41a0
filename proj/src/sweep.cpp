#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "errors.hpp"
#include "logging.hpp"

namespace cryoeo {

namespace {

std::string profile_key(const DeviceSpec& d, const MaterialModel& mat,
                        const MeshParams& p) {
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "%.9e|%.9e|%.9e|%.9e|%.9e|%.9e|%.9e|%d|%s|%.9e|%.9e|%d|%d|%g",
                d.major_radius, d.thickness, d.source_radial_inset,
                d.source_cross_section_radius, d.mw_annulus_width,
                d.contact_inner_radius, d.contact_outer_radius,
                static_cast<int>(d.include_copper), mat.name.c_str(),
                mat.conductivity_coeff, d.side_contact_height, p.nr, p.nz,
                p.refine_source);
  return std::string(buf);
}

int auto_nz(const DeviceSpec& spec) {
  return std::max(4, static_cast<int>(std::llround(spec.thickness / 50e-6)));
}

int worker_count(int jobs, std::size_t points) {
  int n = jobs > 0 ? jobs
                   : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  return static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(n), points));
}

}  // namespace

AxiMesh make_chain_mesh(const DeviceSpec& spec, const MeshParams& params) {
  const int nr = params.nr > 0 ? params.nr : 50;
  const int nz = params.nz > 0 ? params.nz : auto_nz(spec);
  return build_mesh(spec, nr, nz, params.refine_source);
}

const SteadyProfile& ThermalCache::profile(const DeviceSpec& spec,
                                           const MaterialModel& mat,
                                           const MeshParams& params) {
  const std::string key = profile_key(spec, mat, params);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = profiles_.find(key);
  if (it == profiles_.end()) {
    const AxiMesh mesh = make_chain_mesh(spec, params);
    it = profiles_.emplace(key, steady_unit_profile(mesh, mat)).first;
  }
  return it->second;
}

SweepRow evaluate_chain(const ChainContext& ctx, ThermalCache& cache,
                        double P_o, double eta_override) {
  SweepRow row;
  row.P_o = P_o;
  if (P_o < 0.0) {
    raise(ErrorCode::InvalidArgument, "sweep", "negative drive power");
  }
  if (eta_override > 1.0) {
    raise(ErrorCode::InvalidArgument, "sweep",
          "eta override must lie in [0, 1]");
  }
  PumpSchedule sched = ctx.pump;
  sched.P_o = P_o;
  const bool pulsed = sched.mode == PumpSchedule::Mode::Pulsed;
  const double base = ctx.fridge.base_temp;

  // Boundary and port temperatures.  A pulsed protocol leaves a negligible
  // duty-averaged load on the stage, so contacts and line stay at base; a
  // continuous drive warms the whole stage through the fridge response.
  double T_B = base;
  double T_port = base;
  if (!ctx.no_heating && !pulsed) {
    T_B = boundary_temperature(ctx.fridge, average_heat_load(sched));
    T_port = T_B;
  }
  row.T_B = T_B;

  // Device temperature averaged over the microwave mode volume at the full
  // in-pulse power (pulses last far longer than the thermal rise time).
  double T_av = T_B;
  if (!ctx.no_heating && P_o > 0.0 && sched.heat_fraction > 0.0) {
    const SteadyProfile& prof =
        cache.profile(ctx.device, ctx.material, ctx.mesh);
    T_av = mode_average_temp(prof, P_o * sched.heat_fraction, T_B);
  }
  row.T_av = T_av;

  const ModeSystem& ms = ctx.modes;
  const double n_i = bose_occupancy(T_av, ms.mw_frequency);
  const double n_port = bose_occupancy(T_port, ms.mw_frequency);
  const double n_pump = pump_photon_number(ms, P_o);

  double eta_mw, C, n_bar;
  if (eta_override >= 0.0) {
    // Retune the external microwave coupling at fixed intrinsic loss.  In
    // terms of eta the chain stays finite at both endpoints: eta = 1 sends
    // the total linewidth to infinity, so C -> 0 and only line noise
    // enters.
    eta_mw = eta_override;
    C = (1.0 - eta_override) * 4.0 * n_pump * ms.g * ms.g /
        (ms.kappa_o() * ms.kappa_i_mw);
    n_bar = (1.0 - eta_override) * n_i + eta_override * n_port;
  } else {
    eta_mw = ms.eta_mw();
    C = cooperativity(ms, n_pump);
    n_bar = (ms.kappa_i_mw / ms.kappa_mw()) * n_i +
            (ms.kappa_e_mw / ms.kappa_mw()) * n_port;
  }
  row.eta_mw = eta_mw;
  row.C = C;
  row.n_bar = n_bar;

  NoiseInput noise;
  noise.cooperativity = C;
  noise.eta_mw = eta_mw;
  noise.eta_o = ms.eta_o();
  noise.n_bar = n_bar;
  row.F = fidelity(ctx.state, noise);
  return row;
}

std::vector<SweepRow> run_sweep(const ChainContext& ctx, ThermalCache& cache,
                                const SweepSpec& spec) {
  if (spec.values.empty()) {
    raise(ErrorCode::InvalidArgument, "sweep", "empty sweep grid");
  }
  const std::size_t n = spec.values.size();
  std::vector<SweepRow> rows(n);

  auto eval_one = [&](std::size_t k) {
    const double v = spec.values[k];
    try {
      switch (spec.variable) {
        case SweepSpec::Variable::Power:
          rows[k] = evaluate_chain(ctx, cache, v, spec.fixed_eta);
          break;
        case SweepSpec::Variable::Coupling:
          rows[k] = evaluate_chain(ctx, cache, spec.fixed_power, v);
          break;
        case SweepSpec::Variable::Thickness: {
          ChainContext local = ctx;
          local.device.thickness = v;
          rows[k] =
              evaluate_chain(local, cache, spec.fixed_power, spec.fixed_eta);
          break;
        }
      }
    } catch (const Error& e) {
      rows[k].P_o = spec.variable == SweepSpec::Variable::Power
                        ? v
                        : spec.fixed_power;
      rows[k].T_B = rows[k].T_av = rows[k].n_bar = rows[k].C = rows[k].F =
          std::nan("");
      rows[k].error = e.what();
      log::warn("sweep", "point " + std::to_string(k) +
                             " failed: " + std::string(e.what()));
    }
  };

  // Profiles are shared; build them up front so workers only read.
  if (!ctx.no_heating) {
    if (spec.variable == SweepSpec::Variable::Thickness) {
      for (double d : spec.values) {
        DeviceSpec dev = ctx.device;
        dev.thickness = d;
        (void)cache.profile(dev, ctx.material, ctx.mesh);
      }
    } else {
      (void)cache.profile(ctx.device, ctx.material, ctx.mesh);
    }
  }

  const int workers = worker_count(spec.jobs, n);
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) eval_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next.fetch_add(1); k < n; k = next.fetch_add(1)) {
          eval_one(k);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

ScalarMax maximize_scalar(const std::function<double(double)>& f, double lo,
                          double hi, int coarse_points, double tol) {
  if (!(hi > lo)) {
    raise(ErrorCode::InvalidArgument, "sweep",
          "maximizer needs an interval with hi > lo");
  }
  if (coarse_points < 3) {
    raise(ErrorCode::InvalidArgument, "sweep",
          "maximizer needs at least 3 coarse points");
  }
  std::vector<double> xs(static_cast<std::size_t>(coarse_points));
  std::vector<double> fs(static_cast<std::size_t>(coarse_points));
  std::size_t best = 0;
  for (int k = 0; k < coarse_points; ++k) {
    xs[k] = lo + (hi - lo) * k / (coarse_points - 1);
    fs[k] = f(xs[k]);
    if (fs[k] > fs[best]) best = static_cast<std::size_t>(k);
  }
  ScalarMax out;
  out.on_boundary =
      best == 0 || best == static_cast<std::size_t>(coarse_points - 1);

  double a = xs[best == 0 ? 0 : best - 1];
  double b = xs[std::min<std::size_t>(best + 1,
                                      static_cast<std::size_t>(coarse_points) -
                                          1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && (b - a) > tol * (hi - lo); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  out.x = 0.5 * (a + b);
  out.value = f(out.x);
  if (out.value < fs[best]) {
    // Can happen for ragged objectives; fall back to the best coarse
    // sample rather than report a worse refined point.
    log::warn("sweep", "refinement lost to the coarse scan; keeping grid max");
    out.x = xs[best];
    out.value = fs[best];
  }
  return out;
}

OptimumResult maximize_fidelity(const ChainContext& ctx, ThermalCache& cache,
                                SweepSpec::Variable variable, double lo,
                                double hi, double fixed_power,
                                double fixed_eta, int coarse_points,
                                double tol) {
  if (variable == SweepSpec::Variable::Thickness) {
    raise(ErrorCode::InvalidArgument, "sweep",
          "optimization runs over power or coupling only");
  }
  auto objective = [&](double x) {
    return variable == SweepSpec::Variable::Power
               ? evaluate_chain(ctx, cache, x, fixed_eta).F
               : evaluate_chain(ctx, cache, fixed_power, x).F;
  };
  const ScalarMax m = maximize_scalar(objective, lo, hi, coarse_points, tol);
  OptimumResult out;
  out.argument = m.x;
  out.on_boundary = m.on_boundary;
  out.row = variable == SweepSpec::Variable::Power
                ? evaluate_chain(ctx, cache, m.x, fixed_eta)
                : evaluate_chain(ctx, cache, fixed_power, m.x);
  return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) raise(ErrorCode::IoError, "sweep", "cannot open " + path);
  std::fprintf(f, "P_o_W, eta_mw, T_B_K, T_av_K, n_bar, C, F\n");
  for (const SweepRow& r : rows) {
    std::fprintf(f, "%.12g, %.12g, %.12g, %.12g, %.12g, %.12g, %.12g\n",
                 r.P_o, r.eta_mw, r.T_B, r.T_av, r.n_bar, r.C, r.F);
  }
  std::fclose(f);
}

}  // namespace cryoeo
