#include "thermal.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>

#include "constants.hpp"
#include "errors.hpp"
#include "logging.hpp"

namespace cryoeo {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;
using Solver = Eigen::SimplicialLDLT<SpMat>;

// Geometry-only discretization of -div(grad u) with Dirichlet elimination.
// The operator acts on the transformed potential, so it is independent of
// the material; material laws enter through the potential <-> temperature
// mapping and the transient mass term.
struct Assembled {
  SpMat A;            // SPD stiffness with boundary conductances on the diag
  Vec b_src;          // load per watt of injected power
  Vec cond_bottom;    // per-cell Dirichlet conductances by surface
  Vec cond_top;
  Vec cond_side;
  Vec volume;         // cell volumes
};

Assembled assemble(const AxiMesh& m) {
  const int n = m.cell_count();
  Assembled out;
  out.b_src = Vec::Zero(n);
  out.cond_bottom = Vec::Zero(n);
  out.cond_top = Vec::Zero(n);
  out.cond_side = Vec::Zero(n);
  out.volume = Vec::Zero(n);

  const double v_src = m.source_volume();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(n) * 5);

  for (int i = 0; i < m.nr; ++i) {
    const double ring = constants::kPi * (m.r_faces[i + 1] * m.r_faces[i + 1] -
                                          m.r_faces[i] * m.r_faces[i]);
    for (int j = 0; j < m.nz; ++j) {
      const int c = m.index(i, j);
      out.volume[c] = m.cell_volume[c];
      double diag = 0.0;

      // Radial neighbours; the axis (i = 0 inner face) carries no flux.
      if (i + 1 < m.nr) {
        const double area = constants::kTwoPi * m.r_faces[i + 1] * m.dz[j];
        const double cond = area / (m.r_center[i + 1] - m.r_center[i]);
        diag += cond;
        trip.emplace_back(c, m.index(i + 1, j), -cond);
      } else if (m.side_contact(j)) {
        const double area = constants::kTwoPi * m.r_faces[i + 1] * m.dz[j];
        const double cond = area / (m.r_faces[i + 1] - m.r_center[i]);
        diag += cond;
        out.cond_side[c] += cond;
      }
      if (i > 0) {
        const double area = constants::kTwoPi * m.r_faces[i] * m.dz[j];
        const double cond = area / (m.r_center[i] - m.r_center[i - 1]);
        diag += cond;
        trip.emplace_back(c, m.index(i - 1, j), -cond);
      }

      // Axial neighbours; top and bottom faces are clamped on the ring.
      if (j + 1 < m.nz) {
        const double cond = ring / (m.z_center[j + 1] - m.z_center[j]);
        diag += cond;
        trip.emplace_back(c, m.index(i, j + 1), -cond);
      } else if (m.face_contact(i)) {
        const double cond = ring / (m.z_faces[m.nz] - m.z_center[j]);
        diag += cond;
        out.cond_top[c] += cond;
      }
      if (j > 0) {
        const double cond = ring / (m.z_center[j] - m.z_center[j - 1]);
        diag += cond;
        trip.emplace_back(c, m.index(i, j - 1), -cond);
      } else if (m.face_contact(i)) {
        const double cond = ring / (m.z_center[j] - m.z_faces[0]);
        diag += cond;
        out.cond_bottom[c] += cond;
      }

      trip.emplace_back(c, c, diag);
      if (m.in_source[c]) {
        out.b_src[c] = m.cell_volume[c] / v_src;  // unit total power
      }
    }
  }
  out.A = SpMat(n, n);
  out.A.setFromTriplets(trip.begin(), trip.end());
  return out;
}

Vec dirichlet_load(const Assembled& a, double u_bottom, double u_top,
                   double u_side) {
  return a.cond_bottom * u_bottom + a.cond_top * u_top + a.cond_side * u_side;
}

void check_has_contact(const Assembled& a) {
  const double total = a.cond_bottom.sum() + a.cond_top.sum() +
                       a.cond_side.sum();
  if (total <= 0.0) {
    raise(ErrorCode::MeshError, "thermal",
          "no Dirichlet contact area: contact rings miss every cell");
  }
}

std::vector<double> to_temperature(const MaterialModel& mat, const Vec& u) {
  std::vector<double> T(static_cast<std::size_t>(u.size()));
  for (Eigen::Index c = 0; c < u.size(); ++c) {
    if (!(u[c] > 0.0)) {
      raise(ErrorCode::NonPositiveTemperature, "thermal",
            "non-positive potential in solution; check boundary setup");
    }
    T[static_cast<std::size_t>(c)] = kirchhoff_inverse(mat, u[c]);
  }
  return T;
}

// Mass coefficient of the transient term in the transformed variable:
// rho c(T) dT/dt = m(u) du/dt with m = rho c(T)/k(T).  When the two power
// laws share an exponent, m is a constant and each implicit step is linear.
struct MassLaw {
  double m0 = 0.0;       // value at u = 1 (or the constant value)
  double expo = 0.0;     // d ln m / d ln u
  bool constant = true;

  double value(double u) const {
    return constant ? m0 : m0 * std::pow(u, expo);
  }
  double derivative(double u) const {
    return constant ? 0.0 : expo * value(u) / u;
  }
};

MassLaw mass_law(const MaterialModel& mat) {
  MassLaw law;
  const double p = mat.conductivity_exponent;
  const double q = mat.heat_capacity_exponent;
  const double rho_ac = mat.density * mat.heat_capacity_coeff;
  if (p == q) {
    law.constant = true;
    law.m0 = rho_ac / mat.conductivity_coeff;
    return law;
  }
  // m(u) = rho a_c / a_k * T^(q-p) with T = ((p+1) u / a_k)^(1/(p+1)).
  law.constant = false;
  law.expo = (q - p) / (p + 1.0);
  law.m0 = rho_ac / mat.conductivity_coeff *
           std::pow((p + 1.0) / mat.conductivity_coeff, law.expo);
  return law;
}

double annulus_average_temp(const AxiMesh& m, const MaterialModel& mat,
                            const Vec& u) {
  double num = 0.0, den = 0.0;
  for (int c = 0; c < m.cell_count(); ++c) {
    if (!m.in_mw[c]) continue;
    num += kirchhoff_inverse(mat, std::max(u[c], 0.0)) * m.cell_volume[c];
    den += m.cell_volume[c];
  }
  return num / den;
}

}  // namespace

double source_power(double t, const PumpSchedule& sched) {
  if (t < 0.0) {
    raise(ErrorCode::InvalidArgument, "thermal", "negative time");
  }
  if (sched.mode == PumpSchedule::Mode::Instant) return sched.P_o;
  return sched.P_o * (-std::expm1(-t / sched.tau));
}

std::vector<double> solve_steady(const AxiMesh& mesh, const MaterialModel& mat,
                                 double T_B, double P_o,
                                 double heat_fraction) {
  return solve_steady_bc(mesh, mat, BoundaryTemps{T_B, T_B, T_B}, P_o,
                         heat_fraction);
}

std::vector<double> solve_steady_bc(const AxiMesh& mesh,
                                    const MaterialModel& mat,
                                    const BoundaryTemps& bc, double P_o,
                                    double heat_fraction) {
  if (!(bc.bottom > 0.0 && bc.top > 0.0 && bc.side > 0.0)) {
    raise(ErrorCode::InvalidArgument, "thermal",
          "boundary temperatures must be positive");
  }
  if (P_o < 0.0) {
    raise(ErrorCode::InvalidArgument, "thermal", "negative power");
  }
  if (P_o > 0.0 && mesh.source_volume() == 0.0) {
    raise(ErrorCode::MeshError, "thermal",
          "cannot inject power: mesh has no source cells");
  }
  const Assembled a = assemble(mesh);
  check_has_contact(a);
  // The steady problem is linear in the transformed potential for any pure
  // power-law conductivity, so a single factorization solves it exactly
  // (a Newton iteration would converge in one step).
  const Vec b = P_o * heat_fraction * a.b_src +
                dirichlet_load(a, kirchhoff_potential(mat, bc.bottom),
                               kirchhoff_potential(mat, bc.top),
                               kirchhoff_potential(mat, bc.side));
  Solver solver;
  solver.compute(a.A);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::NewtonDivergence, "thermal",
          "steady factorization failed");
  }
  const Vec u = solver.solve(b);
  return to_temperature(mat, u);
}

TemperatureHistory solve_transient(const AxiMesh& mesh,
                                   const MaterialModel& mat, double boundary_T,
                                   const PumpSchedule& sched,
                                   const SolverConfig& cfg,
                                   const std::vector<double>& snapshot_times) {
  if (!(boundary_T > 0.0)) {
    raise(ErrorCode::InvalidArgument, "thermal",
          "boundary temperature must be positive");
  }
  if (cfg.end_time <= 0.0) {
    raise(ErrorCode::EndTimeBeforeStart, "thermal",
          "end_time must exceed the start time 0");
  }
  if (sched.P_o > 0.0 && mesh.source_volume() == 0.0) {
    raise(ErrorCode::MeshError, "thermal",
          "cannot inject power: mesh has no source cells");
  }

  const Assembled a = assemble(mesh);
  check_has_contact(a);
  const int n = mesh.cell_count();
  const double u_B = kirchhoff_potential(mat, boundary_T);
  const Vec b_dir = dirichlet_load(a, u_B, u_B, u_B);
  const MassLaw mass = mass_law(mat);

  const double dt_max =
      cfg.dt_max > 0.0
          ? cfg.dt_max
          : (sched.mode == PumpSchedule::Mode::Instant ? cfg.end_time / 50.0
                                                       : sched.tau / 10.0);

  Vec u = Vec::Constant(n, u_B);
  TemperatureHistory hist;
  hist.times.push_back(0.0);
  hist.mode_avg.push_back(annulus_average_temp(mesh, mat, u));

  std::vector<double> snaps(snapshot_times);
  std::sort(snaps.begin(), snaps.end());
  std::size_t next_snap = 0;

  // Factorization cache for the constant-mass case, keyed by the step size
  // (the implicit matrix depends only on dt there).
  std::map<double, std::unique_ptr<Solver>> factor_cache;

  double t = 0.0;
  double dt = cfg.dt_initial;
  while (t < cfg.end_time - 1e-18 * cfg.end_time) {
    const double dt_try = std::min({dt, dt_max, cfg.end_time - t});
    const double t_new = t + dt_try;
    const double pw = source_power(t_new, sched) * sched.heat_fraction;
    const Vec b = pw * a.b_src + b_dir;
    const double scale =
        b.lpNorm<Eigen::Infinity>() +
        (a.volume.cwiseProduct(u) * (mass.value(u_B) / dt_try))
            .lpNorm<Eigen::Infinity>() +
        1e-30;

    Vec u_new = u;
    bool converged = false;
    double res_norm = 0.0;
    for (int iter = 1; iter <= cfg.newton_max_iter; ++iter) {
      Vec mvec(n), mprime(n);
      for (int c = 0; c < n; ++c) {
        mvec[c] = mass.value(u_new[c]);
        mprime[c] = mass.derivative(u_new[c]);
      }
      const Vec residual = a.volume.cwiseProduct(mvec)
                                   .cwiseProduct(u_new - u) / dt_try +
                           a.A * u_new - b;
      res_norm = residual.lpNorm<Eigen::Infinity>();
      if (res_norm <= cfg.newton_tol * scale) {
        converged = iter <= cfg.newton_max_iter;
        // Fast convergence widens the next step, per the adaptive policy.
        if (iter <= 3) dt = std::min(dt_try * 2.0, dt_max);
        break;
      }
      Solver* solver = nullptr;
      std::unique_ptr<Solver> local;
      if (mass.constant) {
        auto it = factor_cache.find(dt_try);
        if (it == factor_cache.end()) {
          SpMat M = a.A;
          const Vec diag_add = a.volume * (mass.m0 / dt_try);
          for (int c = 0; c < n; ++c) M.coeffRef(c, c) += diag_add[c];
          auto s = std::make_unique<Solver>();
          s->compute(M);
          if (s->info() != Eigen::Success) {
            raise(ErrorCode::NewtonDivergence, "thermal",
                  "implicit-step factorization failed");
          }
          it = factor_cache.emplace(dt_try, std::move(s)).first;
        }
        solver = it->second.get();
      } else {
        SpMat M = a.A;
        const Vec diag_add =
            a.volume.cwiseProduct(mvec + mprime.cwiseProduct(u_new - u)) /
            dt_try;
        for (int c = 0; c < n; ++c) M.coeffRef(c, c) += diag_add[c];
        local = std::make_unique<Solver>();
        local->compute(M);
        if (local->info() != Eigen::Success) break;  // treat as failed step
        solver = local.get();
      }
      u_new -= solver->solve(residual);
    }

    if (!converged) {
      dt = dt_try / 2.0;
      if (dt < 1e-18) {
        raise(ErrorCode::NewtonDivergence, "thermal",
              "time step collapsed; last residual " + std::to_string(res_norm));
      }
      continue;
    }

    if (u_new.minCoeff() <= 0.0) {
      raise(ErrorCode::NonPositiveTemperature, "thermal",
            "non-positive temperature reached during integration");
    }
    u = u_new;
    t = t_new;
    hist.times.push_back(t);
    hist.mode_avg.push_back(annulus_average_temp(mesh, mat, u));
    while (next_snap < snaps.size() && t >= snaps[next_snap]) {
      hist.snapshots.emplace_back(t, to_temperature(mat, u));
      ++next_snap;
    }
  }
  return hist;
}

double rise_time(const TemperatureHistory& hist, double fraction,
                 double steady_tol) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    raise(ErrorCode::InvalidArgument, "thermal",
          "rise fraction must lie in (0, 1)");
  }
  const std::size_t n = hist.times.size();
  if (n < 2) {
    raise(ErrorCode::NotSaturated, "thermal", "history too short");
  }
  const double T0 = hist.mode_avg.front();
  const double T_end = hist.mode_avg[n - 1];
  const double excursion = T_end - T0;
  const double last_step = std::abs(T_end - hist.mode_avg[n - 2]);
  if (last_step > steady_tol * std::max(std::abs(excursion),
                                        std::abs(T_end))) {
    raise(ErrorCode::NotSaturated, "thermal",
          "history has not reached saturation; extend end_time");
  }
  const double target = T0 + fraction * excursion;
  if (excursion == 0.0) return 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    if (hist.mode_avg[k] >= target) {
      const double t0 = hist.times[k - 1], t1 = hist.times[k];
      const double y0 = hist.mode_avg[k - 1], y1 = hist.mode_avg[k];
      if (y1 == y0) return t1;
      return t0 + (target - y0) / (y1 - y0) * (t1 - t0);
    }
  }
  raise(ErrorCode::NotSaturated, "thermal",
        "target fraction never reached within the history");
}

double characteristic_diffusion_time(const MaterialModel& mat,
                                     double half_thickness, double T_ref) {
  if (!(half_thickness > 0.0)) {
    raise(ErrorCode::InvalidArgument, "thermal",
          "half_thickness must be positive");
  }
  const double c_vol = volumetric_heat_capacity(mat, T_ref);
  const double k = conductivity(mat, T_ref);
  return c_vol * half_thickness * half_thickness / k;
}

double contact_heat_flow(const AxiMesh& mesh, const MaterialModel& mat,
                         const std::vector<double>& T_field,
                         const BoundaryTemps& bc) {
  if (T_field.size() != static_cast<std::size_t>(mesh.cell_count())) {
    raise(ErrorCode::InvalidArgument, "thermal",
          "field size does not match mesh");
  }
  const Assembled a = assemble(mesh);
  const double ub = kirchhoff_potential(mat, bc.bottom);
  const double ut = kirchhoff_potential(mat, bc.top);
  const double us = kirchhoff_potential(mat, bc.side);
  double flow = 0.0;
  for (int c = 0; c < mesh.cell_count(); ++c) {
    const double uc = kirchhoff_potential(mat, T_field[c]);
    flow += a.cond_bottom[c] * (uc - ub) + a.cond_top[c] * (uc - ut) +
            a.cond_side[c] * (uc - us);
  }
  return flow;
}

SteadyProfile steady_unit_profile(const AxiMesh& mesh,
                                  const MaterialModel& mat) {
  if (mesh.source_volume() == 0.0) {
    raise(ErrorCode::MeshError, "thermal",
          "mesh has no source cells; cannot form a unit-power profile");
  }
  const Assembled a = assemble(mesh);
  check_has_contact(a);
  Solver solver;
  solver.compute(a.A);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::NewtonDivergence, "thermal",
          "unit-profile factorization failed");
  }
  const Vec phi = solver.solve(a.b_src);
  SteadyProfile prof;
  prof.material = mat;
  for (int c = 0; c < mesh.cell_count(); ++c) {
    if (!mesh.in_mw[c]) continue;
    prof.annulus_phi.push_back(phi[c]);
    prof.annulus_weight.push_back(mesh.cell_volume[c]);
    prof.weight_sum += mesh.cell_volume[c];
  }
  if (prof.weight_sum == 0.0) {
    raise(ErrorCode::EmptyRegion, "thermal", "microwave annulus is empty");
  }
  return prof;
}

double mode_average_temp(const SteadyProfile& prof, double P_heat,
                         double T_B) {
  const double u_B = kirchhoff_potential(prof.material, T_B);
  double num = 0.0;
  for (std::size_t k = 0; k < prof.annulus_phi.size(); ++k) {
    const double u = u_B + P_heat * prof.annulus_phi[k];
    num += kirchhoff_inverse(prof.material, u) * prof.annulus_weight[k];
  }
  return num / prof.weight_sum;
}

void write_history_csv(const TemperatureHistory& hist,
                       const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) raise(ErrorCode::IoError, "thermal", "cannot open " + path);
  std::fprintf(f, "t_s, T_av_K\n");
  for (std::size_t k = 0; k < hist.times.size(); ++k) {
    std::fprintf(f, "%.12g, %.12g\n", hist.times[k], hist.mode_avg[k]);
  }
  std::fclose(f);
}

void write_snapshot_csv(const AxiMesh& mesh,
                        const std::vector<double>& T_field,
                        const std::string& path) {
  if (T_field.size() != static_cast<std::size_t>(mesh.cell_count())) {
    raise(ErrorCode::InvalidArgument, "thermal",
          "field size does not match mesh");
  }
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) raise(ErrorCode::IoError, "thermal", "cannot open " + path);
  std::fprintf(f, "r_m, z_m, T_K\n");
  for (int i = 0; i < mesh.nr; ++i) {
    for (int j = 0; j < mesh.nz; ++j) {
      std::fprintf(f, "%.9e, %.9e, %.9e\n", mesh.r_center[i],
                   mesh.z_center[j], T_field[mesh.index(i, j)]);
    }
  }
  std::fclose(f);
}

}  // namespace cryoeo
