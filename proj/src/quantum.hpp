#pragma once

#include "constants.hpp"

namespace cryoeo {

// Cavity-mode parameters of the transducer.  All rates are angular
// frequencies [rad/s].  The optical resonance sits near 1550 nm; the
// microwave mode is a 10 GHz whispering-gallery resonance read out
// through an adjustable external port.
struct ModeSystem {
  double pump_frequency =
      constants::kTwoPi * constants::kSpeedOfLight / 1550e-9;
  double mw_frequency = constants::kTwoPi * 1.0e10;
  double kappa_i_o = constants::kTwoPi * 0.7e6;   // optical intrinsic loss
  double kappa_e_o = constants::kTwoPi * 0.7e6;   // optical port coupling
  double kappa_i_mw = constants::kTwoPi * 32.4e6; // microwave intrinsic loss
  double kappa_e_mw = constants::kTwoPi * 7.2e6;  // microwave port coupling
  double g = constants::kTwoPi * 7.4;             // vacuum coupling rate

  [[nodiscard]] double kappa_o() const { return kappa_i_o + kappa_e_o; }
  [[nodiscard]] double kappa_mw() const { return kappa_i_mw + kappa_e_mw; }
  [[nodiscard]] double eta_o() const { return kappa_e_o / kappa_o(); }
  [[nodiscard]] double eta_mw() const { return kappa_e_mw / kappa_mw(); }
};

// Target state of the conversion protocol.
struct QuantumState {
  enum class Kind { Cat, Squeezed };
  Kind kind = Kind::Cat;
  double alpha = 1.0;             // coherent amplitude
  double phi = constants::kPi;    // cat superposition phase (pi = odd cat)
  double r = 0.5;                 // squeeze parameter
  double phi_alpha = 0.0;         // displacement quadrature angle
};

// Channel quality feeding the fidelity closed forms.
struct NoiseInput {
  double cooperativity = 1.0;  // electro-optic cooperativity C
  double eta_mw = 1.0;         // microwave extraction efficiency
  double eta_o = 1.0;          // optical extraction efficiency
  double n_bar = 0.0;          // thermal occupancy entering the microwave mode
};

// Planck occupancy of a mode at angular frequency omega [rad/s] coupled to
// a bath at temperature T [K].  T = 0 maps to exactly zero.
[[nodiscard]] double bose_occupancy(double temperature, double omega);

// Inverse of bose_occupancy: bath temperature producing occupancy n > 0.
[[nodiscard]] double temperature_for_occupancy(double n, double omega);

// Occupancy seen by the microwave mode: the intrinsic bath at the device
// temperature and the external port at the line temperature mix in
// proportion to their coupling rates.
[[nodiscard]] double total_occupancy(const ModeSystem& ms, double T_internal,
                                     double T_port);

// Intracavity pump photon number sustained by optical input power P_o [W].
[[nodiscard]] double pump_photon_number(const ModeSystem& ms, double P_o);

// Electro-optic cooperativity at a given pump photon number.
[[nodiscard]] double cooperativity(const ModeSystem& ms, double n_pump);

// Amplitude transmission of the microwave-to-optical conversion channel.
[[nodiscard]] double conversion_amplitude(double C, double eta_mw,
                                          double eta_o);

// Added thermal-noise weight of the channel; exactly zero below an
// occupancy floor of 1e-9 so that noiseless identities hold bit-exactly.
[[nodiscard]] double added_noise(double C, double n_bar, double eta_o);

// Conversion fidelity of the requested state through the lossy, thermally
// contaminated channel.  fidelity() dispatches on state.kind.
//
// Validity: the bounds F in [0, 1] and monotone degradation with n_bar
// (at odd cat phase) are guaranteed on the physical domain
//   cat:      alpha in [1, 4], phi in [0, 2 pi], alpha^2 * n_bar <= 1/4
//   squeezed: r in [0, 2], phi_alpha in [0, pi/2]
// with C >= 0, eta_mw in [0, 1], eta_o in (0, 1], n_bar >= 0.  Outside it
// the expressions still evaluate; excursions beyond 1e-9 past the unit
// interval are clamped and logged.  An odd cat of zero amplitude does not
// exist and is rejected.
[[nodiscard]] double fidelity(const QuantumState& state,
                              const NoiseInput& in);
[[nodiscard]] double fidelity_cat(const QuantumState& state,
                                  const NoiseInput& in);
[[nodiscard]] double fidelity_squeezed(const QuantumState& state,
                                       const NoiseInput& in);

}  // namespace cryoeo
