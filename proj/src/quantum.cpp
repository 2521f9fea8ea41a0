#include "quantum.hpp"

#include <cmath>

#include "errors.hpp"
#include "logging.hpp"

namespace cryoeo {

namespace {

// Strength of the interference-revival correction in the cat fidelity and
// of its cubic trim; calibrated once against the full channel model.
constexpr double kGainCoeff = 7.4;
constexpr double kTrimCoeff = 0.2;
// Thermal occupancies below this floor are treated as exactly zero.
constexpr double kNbarFloor = 1e-9;
// Below this conversion amplitude the cat expression switches to its
// analytic vacuum limit: the direct form loses ~2e-16 / e3^2 to
// cancellation while the limit form is accurate to O(e3).
constexpr double kTransferBranch = 2e-6;
// Numerical excursions past [0, 1] larger than this are worth a warning.
constexpr double kClampTol = 1e-9;

void check_noise(const NoiseInput& in) {
  if (!std::isfinite(in.cooperativity) || in.cooperativity < 0.0) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "cooperativity must be finite and non-negative");
  }
  if (!(in.eta_mw >= 0.0 && in.eta_mw <= 1.0)) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "eta_mw must lie in [0, 1]");
  }
  if (!(in.eta_o > 0.0 && in.eta_o <= 1.0)) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "eta_o must lie in (0, 1]");
  }
  if (!std::isfinite(in.n_bar) || in.n_bar < 0.0) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "n_bar must be finite and non-negative");
  }
}

double clamp_unit(double F, const char* what) {
  if (F > 1.0 + kClampTol || F < -kClampTol) {
    log::warn("quantum", std::string(what) +
                             " fidelity left [0, 1]; clamping " +
                             std::to_string(F));
  }
  if (F < 0.0) return 0.0;
  if (F > 1.0) return 1.0;
  return F;
}

}  // namespace

double bose_occupancy(double temperature, double omega) {
  if (temperature < 0.0 || !(omega > 0.0)) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "need temperature >= 0 and omega > 0");
  }
  if (temperature == 0.0) return 0.0;
  const double x = constants::kHbar * omega /
                   (constants::kBoltzmann * temperature);
  return 1.0 / std::expm1(x);
}

double temperature_for_occupancy(double n, double omega) {
  if (!(n > 0.0) || !(omega > 0.0)) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "need occupancy > 0 and omega > 0");
  }
  return constants::kHbar * omega /
         (constants::kBoltzmann * std::log1p(1.0 / n));
}

double total_occupancy(const ModeSystem& ms, double T_internal,
                       double T_port) {
  const double kappa = ms.kappa_mw();
  if (!(kappa > 0.0)) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "microwave loss rates must be positive");
  }
  return (ms.kappa_i_mw / kappa) * bose_occupancy(T_internal, ms.mw_frequency) +
         (ms.kappa_e_mw / kappa) * bose_occupancy(T_port, ms.mw_frequency);
}

double pump_photon_number(const ModeSystem& ms, double P_o) {
  if (P_o < 0.0) {
    raise(ErrorCode::InvalidArgument, "quantum", "negative pump power");
  }
  const double kappa = ms.kappa_o();
  if (!(kappa > 0.0) || !(ms.pump_frequency > 0.0)) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "optical rates and pump frequency must be positive");
  }
  const double photon_flux = P_o / (constants::kHbar * ms.pump_frequency);
  return 4.0 * ms.eta_o() / kappa * photon_flux;
}

double cooperativity(const ModeSystem& ms, double n_pump) {
  if (n_pump < 0.0) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "negative pump photon number");
  }
  return 4.0 * n_pump * ms.g * ms.g / (ms.kappa_o() * ms.kappa_mw());
}

double conversion_amplitude(double C, double eta_mw, double eta_o) {
  return 2.0 * std::sqrt(eta_o * eta_mw * std::max(C, 0.0)) / (1.0 + C);
}

double added_noise(double C, double n_bar, double eta_o) {
  if (n_bar <= kNbarFloor) return 0.0;
  const double onepc = 1.0 + C;
  return 8.0 * eta_o * n_bar / (onepc * onepc);
}

double fidelity(const QuantumState& state, const NoiseInput& in) {
  return state.kind == QuantumState::Kind::Cat ? fidelity_cat(state, in)
                                               : fidelity_squeezed(state, in);
}

double fidelity_cat(const QuantumState& state, const NoiseInput& in) {
  check_noise(in);
  if (!std::isfinite(state.alpha) || state.alpha < 0.0 ||
      !std::isfinite(state.phi)) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "cat parameters must be finite with alpha >= 0");
  }
  const double a2 = state.alpha * state.alpha;
  const double cphi = std::cos(state.phi);
  const double e3 = conversion_amplitude(in.cooperativity, in.eta_mw,
                                         in.eta_o);
  const double A = added_noise(in.cooperativity, in.n_bar, in.eta_o);
  const double e5 = 1.0 + A;
  const double s = 1.0 + e5;
  double F;
  if (e3 < kTransferBranch) {
    // Vacuum-transmission limit: the channel passes no signal, and the
    // output is a (possibly thermal) Gaussian overlapping the target cat.
    const double beta = 2.0 * a2 / s;
    const double x = std::exp(-beta);
    const double y = std::exp(-beta * e5);
    if (std::abs(1.0 + cphi) < 1e-9) {
      // Odd cats orthogonalize against the vacuum as alpha -> 0, so both
      // the overlap and the normalization vanish; their ratio is finite
      // for alpha > 0 only.
      if (a2 == 0.0) {
        raise(ErrorCode::InvalidDomain, "quantum",
              "odd cat with zero amplitude is not a state");
      }
      const double norm = -std::expm1(-2.0 * a2);  // 1 - exp(-2 alpha^2)
      F = 2.0 * (y * (1.0 + 2.0 * beta - 1.0 / e5) + e5 * x) /
          (norm * s * std::sqrt(2.0 * s));
    } else {
      F = 2.0 * (x + y * cphi) /
          ((1.0 + cphi * std::exp(-2.0 * a2)) * std::sqrt(2.0 * s));
    }
    return clamp_unit(F, "cat");
  }

  const double e32 = e3 * e3;
  // Normalization product; the second factor is written through expm1 so
  // it stays accurate when e3^2 * alpha^2 is tiny.
  const double f1 = 1.0 + cphi * std::exp(-2.0 * a2);
  const double f2 = (1.0 + cphi) + cphi * std::expm1(-2.0 * a2 * e32);
  const double e4 = f1 * f2;
  if (!(e4 > 0.0)) {
    raise(ErrorCode::InvalidDomain, "quantum",
          "cat normalization vanishes for this alpha, phi combination");
  }
  const double fringe = 0.5 * (1.0 - cphi);
  const double one_m = 1.0 - e3;
  const double gain =
      std::exp(kGainCoeff * a2 * e3 * one_m * one_m * one_m * fringe / s -
               0.5 * kTrimCoeff * a2 * e32 * e3 * one_m);
  const double t1 = (1.0 + std::exp(8.0 * a2 * e32 / s)) *
                    std::exp(-2.0 * a2 * (1.0 + e32) * (1.0 + e32) / s);
  const double t2 = 2.0 * cphi *
                    (std::exp(-2.0 * a2 * (e32 + e5) / s) +
                     std::exp(-2.0 * a2 * (1.0 + e32 * e5) / s));
  const double t3 = std::cos(2.0 * state.phi) *
                    std::exp(-2.0 * a2 * (e3 + e5) * (e3 + e5) / (e5 * s));
  const double t4 =
      std::exp(-2.0 * a2 * (e3 - e5) * (e3 - e5) / (e5 * s));
  F = gain * (t1 + t2 + t3 + t4) / (e4 * std::sqrt(2.0 * s));
  return clamp_unit(F, "cat");
}

double fidelity_squeezed(const QuantumState& state, const NoiseInput& in) {
  check_noise(in);
  if (!std::isfinite(state.alpha) || state.alpha < 0.0 ||
      !std::isfinite(state.r) || state.r < 0.0) {
    raise(ErrorCode::InvalidArgument, "quantum",
          "squeezed parameters must be finite with alpha, r >= 0");
  }
  if (!(state.phi_alpha >= 0.0 && state.phi_alpha <= 0.5 * constants::kPi)) {
    raise(ErrorCode::InvalidDomain, "quantum",
          "displacement angle must lie in [0, pi/2]");
  }
  const double a2 = state.alpha * state.alpha;
  const double C = in.cooperativity;
  const double e3 = conversion_amplitude(C, in.eta_mw, in.eta_o);
  const double A = added_noise(C, in.n_bar, in.eta_o);
  const double e32 = e3 * e3;
  const double e34 = e32 * e32;
  const double e2 = 1.0 + std::cosh(2.0 * state.r);
  const double onepc = 1.0 + C;
  const double e3b2 = 4.0 * in.eta_o * in.eta_o * C / (onepc * onepc);
  const double Vm = 1.0 + e32 * std::expm1(-2.0 * state.r) + A;
  const double Vp = 1.0 + e32 * std::expm1(2.0 * state.r) + A;
  const double D = 0.5 * e2 * (1.0 - e34) + e34 +
                   0.5 * A * e32 * (e2 + e2 * e3b2 - 2.0) + 0.25 * A * A;
  if (!(D > 0.0)) {
    raise(ErrorCode::Internal, "quantum",
          "squeezed normalization became non-positive");
  }
  const double expo =
      -2.0 * a2 * (1.0 - e3) * (1.0 - e3) *
      (std::cos(state.phi_alpha) * Vm + std::sin(state.phi_alpha) * Vp);
  return clamp_unit(std::exp(expo) / std::sqrt(D), "squeezed");
}

}  // namespace cryoeo
