#include "runner.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <limits>

#include "errors.hpp"
#include "logging.hpp"
#include "svg.hpp"

namespace cryoeo {

namespace {

const char* const kColors[] = {"#1f6fb4", "#e06c2b", "#3a8f4d", "#b03a9c",
                               "#c23b3b"};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return std::string(buf);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int k = 0; k < n; ++k) v[k] = lo + (hi - lo) * k / (n - 1);
  return v;
}

std::size_t argmax_f(const std::vector<SweepRow>& rows) {
  std::size_t best = 0;
  double bv = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (std::isfinite(rows[k].F) && rows[k].F > bv) {
      bv = rows[k].F;
      best = k;
    }
  }
  return best;
}

const char* state_tag(QuantumState::Kind kind) {
  return kind == QuantumState::Kind::Cat ? "cat" : "squeezed";
}

// Shared machinery of one run: configuration, profile cache and the
// growing artifact list.
struct Session {
  const RunConfig& cfg;
  ThermalCache cache;
  std::vector<std::string> artifacts;
  std::vector<std::string> details;

  std::string path(const std::string& name) const {
    return (std::filesystem::path(cfg.output_dir) / name).string();
  }
  void note(std::string line) { details.push_back(std::move(line)); }

  std::vector<SweepRow> sweep(const ChainContext& chain, SweepSpec spec,
                              const std::string& name) {
    spec.jobs = cfg.jobs;
    auto rows = run_sweep(chain, cache, spec);
    const std::string p = path(name);
    write_sweep_csv(rows, p);
    artifacts.push_back(p);
    log::info("runner", "wrote " + p);
    return rows;
  }

  void plot(const std::string& name, const std::vector<SvgSeries>& series,
            const std::string& xl, const std::string& yl,
            const std::string& title) {
    if (!cfg.svg) return;
    const std::string p = path(name);
    write_svg_plot(p, series, xl, yl, title);
    artifacts.push_back(p);
  }
};

struct TransientRun {
  TemperatureHistory hist;
  double t90 = std::numeric_limits<double>::quiet_NaN();
};

TransientRun run_transient(Session& s, double thickness,
                           const std::string& history_name,
                           const std::string& snapshot_name) {
  DeviceSpec dev = s.cfg.chain.device;
  dev.thickness = thickness;
  const AxiMesh mesh = make_chain_mesh(dev, s.cfg.chain.mesh);
  std::vector<double> snaps;
  if (!snapshot_name.empty()) snaps.push_back(s.cfg.solver.end_time);
  TransientRun out;
  out.hist = solve_transient(mesh, s.cfg.chain.material,
                             s.cfg.chain.fridge.base_temp, s.cfg.chain.pump,
                             s.cfg.solver, snaps);
  const std::string hp = s.path(history_name);
  write_history_csv(out.hist, hp);
  s.artifacts.push_back(hp);
  if (!snapshot_name.empty() && !out.hist.snapshots.empty()) {
    const std::string sp = s.path(snapshot_name);
    write_snapshot_csv(mesh, out.hist.snapshots.back().second, sp);
    s.artifacts.push_back(sp);
  }
  try {
    out.t90 = rise_time(out.hist, 0.9, s.cfg.solver.steady_tol);
  } catch (const Error& e) {
    log::warn("runner", std::string("rise time unavailable: ") + e.what());
  }
  return out;
}

SweepSpec power_spec(const Session& s) {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::Power;
  spec.values = linspace(s.cfg.sweep.power_min, s.cfg.sweep.power_max,
                         s.cfg.sweep.points);
  return spec;
}

SweepSpec coupling_spec(const Session& s, double power) {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::Coupling;
  spec.values = linspace(s.cfg.sweep.coupling_min, s.cfg.sweep.coupling_max,
                         s.cfg.sweep.points);
  spec.fixed_power = power;
  return spec;
}

std::string do_simulate_thermal(Session& s) {
  const auto tr = run_transient(s, s.cfg.chain.device.thickness,
                                "history.csv", "snapshot_final.csv");
  SvgSeries ser;
  ser.x = tr.hist.times;
  ser.y = tr.hist.mode_avg;
  ser.label = "T_av";
  s.plot("history.svg", {ser}, "t [s]", "T_av [K]", "device warm-up");
  const double T_end = tr.hist.mode_avg.back();
  s.note(fmt("final T_av = %.6g K at t = %.4g s", T_end,
             tr.hist.times.back()));
  if (std::isfinite(tr.t90)) s.note(fmt("t90 = %.4g s", tr.t90));
  std::string line = fmt("T_av = %.6g K at t = %.4g s", T_end,
                         tr.hist.times.back());
  if (std::isfinite(tr.t90)) line += fmt(", t90 = %.4g s", tr.t90);
  return line;
}

std::string do_sweep_power(Session& s) {
  const auto rows = s.sweep(s.cfg.chain, power_spec(s), "sweep_power.csv");
  const std::size_t k = argmax_f(rows);
  SvgSeries ser;
  for (const auto& r : rows) {
    ser.x.push_back(r.P_o);
    ser.y.push_back(r.F);
  }
  ser.label = state_tag(s.cfg.chain.state.kind);
  s.plot("sweep_power.svg", {ser}, "P_o [W]", "F", "fidelity vs drive power");
  return fmt("max F = %.6g at P_o = %.6g W (%zu points)", rows[k].F,
             rows[k].P_o, rows.size());
}

std::string do_sweep_coupling(Session& s) {
  const auto rows = s.sweep(s.cfg.chain, coupling_spec(s, s.cfg.chain.pump.P_o),
                            "sweep_coupling.csv");
  const std::size_t k = argmax_f(rows);
  SvgSeries ser;
  for (const auto& r : rows) {
    ser.x.push_back(r.eta_mw);
    ser.y.push_back(r.F);
  }
  ser.label = state_tag(s.cfg.chain.state.kind);
  s.plot("sweep_coupling.svg", {ser}, "eta_mw", "F",
         "fidelity vs extraction efficiency");
  return fmt("max F = %.6g at eta_mw = %.6g (%zu points)", rows[k].F,
             rows[k].eta_mw, rows.size());
}

std::string do_sweep_thickness(Session& s) {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::Thickness;
  spec.values = s.cfg.sweep.thickness_values;
  spec.fixed_power = s.cfg.chain.pump.P_o;
  const auto rows = s.sweep(s.cfg.chain, spec, "sweep_thickness.csv");
  SvgSeries ser;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    ser.x.push_back(spec.values[k]);
    ser.y.push_back(rows[k].T_av);
    s.note(fmt("thickness %.4g m: T_av = %.6g K, F = %.6g", spec.values[k],
               rows[k].T_av, rows[k].F));
  }
  ser.label = "T_av";
  s.plot("sweep_thickness.svg", {ser}, "thickness [m]", "T_av [K]",
         "device temperature vs thickness");
  return fmt("T_av spans %.6g..%.6g K over %zu thicknesses at P_o = %.4g W",
             rows.front().T_av, rows.back().T_av, rows.size(),
             s.cfg.chain.pump.P_o);
}

std::string do_optimize(Session& s) {
  const bool over_power = s.cfg.sweep.optimize_variable == "power";
  const OptimumResult opt =
      over_power
          ? maximize_fidelity(s.cfg.chain, s.cache,
                              SweepSpec::Variable::Power, s.cfg.sweep.power_min,
                              s.cfg.sweep.power_max, 0.0, -1.0)
          : maximize_fidelity(s.cfg.chain, s.cache,
                              SweepSpec::Variable::Coupling,
                              s.cfg.sweep.coupling_min,
                              s.cfg.sweep.coupling_max,
                              s.cfg.chain.pump.P_o, -1.0);
  const std::string p = s.path("optimum.csv");
  write_sweep_csv({opt.row}, p);
  s.artifacts.push_back(p);
  return fmt("optimal %s = %.6g%s: F = %.6g%s",
             over_power ? "P_o" : "eta_mw", opt.argument,
             over_power ? " W" : "", opt.row.F,
             opt.on_boundary ? " (at interval edge)" : "");
}

std::string do_fig2a(Session& s) {
  const auto tr = run_transient(s, s.cfg.chain.device.thickness,
                                "fig2a_history.csv", "fig2a_snapshot.csv");
  SvgSeries ser;
  ser.x = tr.hist.times;
  ser.y = tr.hist.mode_avg;
  ser.label = "200 um";
  s.plot("fig2a.svg", {ser}, "t [s]", "T_av [K]", "warm-up, 200 um disc");
  s.note(fmt("T_av(end) = %.6g K, t90 = %.4g s", tr.hist.mode_avg.back(),
             tr.t90));
  return fmt("200 um disc: T_av(end) = %.6g K, t90 = %.4g s",
             tr.hist.mode_avg.back(), tr.t90);
}

std::string do_fig3a(Session& s) {
  std::vector<SvgSeries> series;
  std::string line = "t90 per thickness:";
  int ci = 0;
  for (double d : s.cfg.sweep.thickness_values) {
    const long um = std::lround(d * 1e6);
    const auto tr =
        run_transient(s, d, fmt("fig3a_history_%ldum.csv", um), "");
    SvgSeries ser;
    ser.x = tr.hist.times;
    ser.y = tr.hist.mode_avg;
    ser.label = fmt("%ld um", um);
    ser.color = kColors[ci++ % 5];
    series.push_back(std::move(ser));
    s.note(fmt("%ld um: t90 = %.4g s, T_av(end) = %.6g K", um, tr.t90,
               tr.hist.mode_avg.back()));
    line += fmt(" %ld um: %.3g s;", um, tr.t90);
  }
  s.plot("fig3a.svg", series, "t [s]", "T_av [K]", "warm-up vs thickness");
  return line;
}

std::string do_fig3b(Session& s) {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::Thickness;
  spec.values = s.cfg.sweep.thickness_values;
  spec.fixed_power = s.cfg.chain.pump.P_o;
  const auto rows = s.sweep(s.cfg.chain, spec, "fig3b_thickness.csv");
  SvgSeries ser;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    ser.x.push_back(spec.values[k]);
    ser.y.push_back(rows[k].T_av);
    s.note(fmt("thickness %.4g m: T_av = %.6g K", spec.values[k],
               rows[k].T_av));
  }
  ser.label = "T_av";
  s.plot("fig3b.svg", {ser}, "thickness [m]", "T_av [K]",
         "steady temperature vs thickness");
  return fmt("T_av spans %.6g..%.6g K over %zu thicknesses",
             rows.front().T_av, rows.back().T_av, rows.size());
}

std::string do_fig3c(Session& s) {
  const auto rows = s.sweep(s.cfg.chain, power_spec(s), "fig3c_power_cw.csv");
  SvgSeries ser;
  for (const auto& r : rows) {
    ser.x.push_back(r.P_o);
    ser.y.push_back(r.T_av);
  }
  ser.label = "cw";
  s.plot("fig3c.svg", {ser}, "P_o [W]", "T_av [K]",
         "steady temperature vs drive power");
  return fmt("T_av = %.6g K at P_o = %.4g W (cw)", rows.back().T_av,
             rows.back().P_o);
}

std::string do_fig3d(Session& s) {
  ChainContext cw = s.cfg.chain;
  cw.pump.mode = PumpSchedule::Mode::Cw;
  ChainContext pulsed = s.cfg.chain;
  pulsed.pump.mode = PumpSchedule::Mode::Pulsed;
  const auto rows_cw = s.sweep(cw, power_spec(s), "fig3d_power_cw.csv");
  const auto rows_p = s.sweep(pulsed, power_spec(s), "fig3d_power_pulsed.csv");
  std::vector<SvgSeries> series(2);
  for (const auto& r : rows_cw) {
    series[0].x.push_back(r.P_o);
    series[0].y.push_back(r.n_bar);
  }
  series[0].label = "cw";
  for (const auto& r : rows_p) {
    series[1].x.push_back(r.P_o);
    series[1].y.push_back(r.n_bar);
  }
  series[1].label = "pulsed";
  series[1].color = kColors[1];
  s.plot("fig3d.svg", series, "P_o [W]", "n_bar",
         "microwave occupancy vs drive power");
  return fmt("n_bar at %.4g W: cw %.6g, pulsed %.6g", rows_cw.back().P_o,
             rows_cw.back().n_bar, rows_p.back().n_bar);
}

std::string do_fig4a(Session& s) {
  const char* tag = state_tag(s.cfg.chain.state.kind);
  ChainContext cw = s.cfg.chain;
  cw.pump.mode = PumpSchedule::Mode::Cw;
  ChainContext pulsed = s.cfg.chain;
  pulsed.pump.mode = PumpSchedule::Mode::Pulsed;
  ChainContext base = cw;
  base.no_heating = true;
  const auto rows_cw = s.sweep(cw, power_spec(s), fmt("fig4a_%s_cw.csv", tag));
  const auto rows_p =
      s.sweep(pulsed, power_spec(s), fmt("fig4a_%s_pulsed.csv", tag));
  const auto rows_b =
      s.sweep(base, power_spec(s), fmt("fig4a_%s_baseline.csv", tag));
  std::vector<SvgSeries> series(3);
  for (std::size_t k = 0; k < rows_cw.size(); ++k) {
    series[0].x.push_back(rows_cw[k].P_o);
    series[0].y.push_back(rows_cw[k].F);
    series[1].x.push_back(rows_p[k].P_o);
    series[1].y.push_back(rows_p[k].F);
    series[2].x.push_back(rows_b[k].P_o);
    series[2].y.push_back(rows_b[k].F);
  }
  series[0].label = "cw";
  series[1].label = "pulsed";
  series[1].color = kColors[1];
  series[2].label = "no heating";
  series[2].color = kColors[2];
  series[2].dashed = true;
  s.plot("fig4a.svg", series, "P_o [W]", "F", "fidelity vs drive power");
  const std::size_t kc = argmax_f(rows_cw);
  const std::size_t kp = argmax_f(rows_p);
  s.note(fmt("cw max F = %.6g at %.6g W", rows_cw[kc].F, rows_cw[kc].P_o));
  s.note(fmt("pulsed max F = %.6g at %.6g W", rows_p[kp].F, rows_p[kp].P_o));
  return fmt("%s: cw max F = %.6g at %.6g W; pulsed max F = %.6g at %.6g W",
             tag, rows_cw[kc].F, rows_cw[kc].P_o, rows_p[kp].F,
             rows_p[kp].P_o);
}

std::string do_fig4b(Session& s) {
  const char* tag = state_tag(s.cfg.chain.state.kind);
  ChainContext cw = s.cfg.chain;
  cw.pump.mode = PumpSchedule::Mode::Cw;
  ChainContext pulsed = s.cfg.chain;
  pulsed.pump.mode = PumpSchedule::Mode::Pulsed;
  const OptimumResult opt = maximize_fidelity(
      cw, s.cache, SweepSpec::Variable::Power, s.cfg.sweep.power_min,
      s.cfg.sweep.power_max, 0.0, -1.0);
  const double P_star = opt.argument;
  s.note(fmt("%s cw power optimum: P* = %.6g W, F = %.6g", tag, P_star,
             opt.row.F));
  const auto rows_cw = s.sweep(cw, coupling_spec(s, P_star),
                               fmt("fig4b_%s_coupling_cw.csv", tag));
  const auto rows_p = s.sweep(pulsed, coupling_spec(s, P_star),
                              fmt("fig4b_%s_coupling_pulsed.csv", tag));
  const OptimumResult oc = maximize_fidelity(
      cw, s.cache, SweepSpec::Variable::Coupling, 0.0, 1.0, P_star, -1.0);
  const OptimumResult op = maximize_fidelity(
      pulsed, s.cache, SweepSpec::Variable::Coupling, 0.0, 1.0, P_star, -1.0);
  s.note(fmt("eta* cw = %.4g (F = %.6g)", oc.argument, oc.row.F));
  s.note(fmt("eta* pulsed = %.4g (F = %.6g)", op.argument, op.row.F));
  std::vector<SvgSeries> series(2);
  for (std::size_t k = 0; k < rows_cw.size(); ++k) {
    series[0].x.push_back(rows_cw[k].eta_mw);
    series[0].y.push_back(rows_cw[k].F);
    series[1].x.push_back(rows_p[k].eta_mw);
    series[1].y.push_back(rows_p[k].F);
  }
  series[0].label = "cw";
  series[1].label = "pulsed";
  series[1].color = kColors[1];
  s.plot("fig4b.svg", series, "eta_mw", "F",
         "fidelity vs extraction efficiency");
  return fmt("%s: P* = %.6g W; eta* cw = %.4g, pulsed = %.4g", tag, P_star,
             oc.argument, op.argument);
}

std::string do_fig4c(Session& s) {
  std::vector<SvgSeries> series;
  std::string line;
  int ci = 0;
  for (QuantumState::Kind kind :
       {QuantumState::Kind::Cat, QuantumState::Kind::Squeezed}) {
    ChainContext chain = s.cfg.chain;
    chain.state.kind = kind;
    const char* tag = state_tag(kind);
    chain.pump.mode = PumpSchedule::Mode::Cw;
    const auto rows_cw =
        s.sweep(chain, power_spec(s), fmt("fig4c_%s_cw.csv", tag));
    chain.pump.mode = PumpSchedule::Mode::Pulsed;
    const auto rows_p =
        s.sweep(chain, power_spec(s), fmt("fig4c_%s_pulsed.csv", tag));
    chain.pump.mode = PumpSchedule::Mode::Cw;
    chain.no_heating = true;
    const auto rows_b =
        s.sweep(chain, power_spec(s), fmt("fig4c_%s_baseline.csv", tag));
    SvgSeries sc, sp, sb;
    for (std::size_t k = 0; k < rows_cw.size(); ++k) {
      sc.x.push_back(rows_cw[k].P_o);
      sc.y.push_back(rows_cw[k].F);
      sp.x.push_back(rows_p[k].P_o);
      sp.y.push_back(rows_p[k].F);
      sb.x.push_back(rows_b[k].P_o);
      sb.y.push_back(rows_b[k].F);
    }
    sc.label = fmt("%s cw", tag);
    sc.color = kColors[ci];
    sp.label = fmt("%s pulsed", tag);
    sp.color = kColors[ci + 1];
    sb.label = fmt("%s no heating", tag);
    sb.color = kColors[ci];
    sb.dashed = true;
    series.push_back(std::move(sc));
    series.push_back(std::move(sp));
    series.push_back(std::move(sb));
    ci += 2;
    const std::size_t kc = argmax_f(rows_cw);
    s.note(fmt("%s cw max F = %.6g at %.6g W", tag, rows_cw[kc].F,
               rows_cw[kc].P_o));
    line += fmt("%s%s cw max F = %.6g at %.6g W", line.empty() ? "" : "; ",
                tag, rows_cw[kc].F, rows_cw[kc].P_o);
  }
  s.plot("fig4c.svg", series, "P_o [W]", "F",
         "fidelity vs drive power, strong coupling");
  return line;
}

std::string do_fig4d(Session& s) {
  std::vector<SvgSeries> series;
  std::string line;
  int ci = 0;
  for (QuantumState::Kind kind :
       {QuantumState::Kind::Cat, QuantumState::Kind::Squeezed}) {
    ChainContext cw = s.cfg.chain;
    cw.state.kind = kind;
    cw.pump.mode = PumpSchedule::Mode::Cw;
    ChainContext pulsed = cw;
    pulsed.pump.mode = PumpSchedule::Mode::Pulsed;
    const char* tag = state_tag(kind);
    const OptimumResult opt = maximize_fidelity(
        cw, s.cache, SweepSpec::Variable::Power, s.cfg.sweep.power_min,
        s.cfg.sweep.power_max, 0.0, -1.0);
    const double P_star = opt.argument;
    const auto rows_cw = s.sweep(cw, coupling_spec(s, P_star),
                                 fmt("fig4d_%s_coupling_cw.csv", tag));
    const auto rows_p = s.sweep(pulsed, coupling_spec(s, P_star),
                                fmt("fig4d_%s_coupling_pulsed.csv", tag));
    const OptimumResult oc = maximize_fidelity(
        cw, s.cache, SweepSpec::Variable::Coupling, 0.0, 1.0, P_star, -1.0);
    const OptimumResult op = maximize_fidelity(
        pulsed, s.cache, SweepSpec::Variable::Coupling, 0.0, 1.0, P_star,
        -1.0);
    s.note(fmt("%s: P* = %.6g W, eta* cw = %.4g, eta* pulsed = %.4g", tag,
               P_star, oc.argument, op.argument));
    SvgSeries sc, sp;
    for (std::size_t k = 0; k < rows_cw.size(); ++k) {
      sc.x.push_back(rows_cw[k].eta_mw);
      sc.y.push_back(rows_cw[k].F);
      sp.x.push_back(rows_p[k].eta_mw);
      sp.y.push_back(rows_p[k].F);
    }
    sc.label = fmt("%s cw", tag);
    sc.color = kColors[ci];
    sp.label = fmt("%s pulsed", tag);
    sp.color = kColors[ci + 1];
    series.push_back(std::move(sc));
    series.push_back(std::move(sp));
    ci += 2;
    line += fmt("%s%s: eta* cw = %.4g, pulsed = %.4g", line.empty() ? "" : "; ",
                tag, oc.argument, op.argument);
  }
  s.plot("fig4d.svg", series, "eta_mw", "F",
         "fidelity vs extraction efficiency, strong coupling");
  return line;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  if (cfg.scenario.empty()) {
    raise(ErrorCode::InvalidArgument, "runner",
          "no scenario given; set [run] scenario or pass one on the "
          "command line");
  }
  std::error_code ec;
  const std::string out_dir = cfg.output_dir.empty() ? "." : cfg.output_dir;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    raise(ErrorCode::IoError, "runner",
          "cannot create output directory " + out_dir + ": " + ec.message());
  }

  Session s{cfg};
  log::info("runner", "scenario " + cfg.scenario + " -> " + out_dir);

  if (cfg.dump_mesh) {
    const AxiMesh mesh = make_chain_mesh(cfg.chain.device, cfg.chain.mesh);
    const std::string p = s.path("mesh.csv");
    write_mesh_csv(mesh, p);
    s.artifacts.push_back(p);
  }

  std::string summary;
  if (cfg.scenario == "simulate-thermal") {
    summary = do_simulate_thermal(s);
  } else if (cfg.scenario == "sweep-power") {
    summary = do_sweep_power(s);
  } else if (cfg.scenario == "sweep-coupling") {
    summary = do_sweep_coupling(s);
  } else if (cfg.scenario == "sweep-thickness") {
    summary = do_sweep_thickness(s);
  } else if (cfg.scenario == "optimize") {
    summary = do_optimize(s);
  } else if (cfg.scenario == "fig2a") {
    summary = do_fig2a(s);
  } else if (cfg.scenario == "fig3a") {
    summary = do_fig3a(s);
  } else if (cfg.scenario == "fig3b") {
    summary = do_fig3b(s);
  } else if (cfg.scenario == "fig3c") {
    summary = do_fig3c(s);
  } else if (cfg.scenario == "fig3d") {
    summary = do_fig3d(s);
  } else if (cfg.scenario == "fig4a") {
    summary = do_fig4a(s);
  } else if (cfg.scenario == "fig4b") {
    summary = do_fig4b(s);
  } else if (cfg.scenario == "fig4c") {
    summary = do_fig4c(s);
  } else if (cfg.scenario == "fig4d") {
    summary = do_fig4d(s);
  } else {
    raise(ErrorCode::InvalidArgument, "runner",
          "unknown scenario \"" + cfg.scenario +
              "\"; expected simulate-thermal, sweep-power, sweep-coupling, "
              "sweep-thickness, optimize or a figure preset fig2a..fig4d");
  }

  // Persist the summary next to the data.
  {
    const std::string p = s.path("summary.txt");
    std::FILE* f = std::fopen(p.c_str(), "w");
    if (!f) raise(ErrorCode::IoError, "runner", "cannot open " + p);
    std::fprintf(f, "%s\n", summary.c_str());
    for (const auto& d : s.details) std::fprintf(f, "%s\n", d.c_str());
    std::fclose(f);
    s.artifacts.push_back(p);
  }

  RunResult out;
  out.summary = summary;
  out.artifacts = std::move(s.artifacts);
  return out;
}

}  // namespace cryoeo
