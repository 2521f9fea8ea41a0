#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <functional>
#include <random>

#include "constants.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "quantum.hpp"

using namespace cryoeo;
using constants::kPi;

namespace {

QuantumState cat_state(double alpha, double phi) {
  QuantumState s;
  s.kind = QuantumState::Kind::Cat;
  s.alpha = alpha;
  s.phi = phi;
  return s;
}

QuantumState squeezed_state(double alpha, double r, double phi_alpha) {
  QuantumState s;
  s.kind = QuantumState::Kind::Squeezed;
  s.alpha = alpha;
  s.r = r;
  s.phi_alpha = phi_alpha;
  return s;
}

NoiseInput noise(double C, double eta_mw, double eta_o, double n_bar) {
  return NoiseInput{C, eta_mw, eta_o, n_bar};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

}  // namespace

TEST_CASE("thermal occupancy round trips") {
  const double omega = constants::kTwoPi * 1e10;
  CHECK(bose_occupancy(0.0, omega) == 0.0);
  CHECK(bose_occupancy(0.02, omega) ==
        doctest::Approx(3.78944917016416e-11).epsilon(1e-11));
  CHECK(bose_occupancy(0.184, omega) ==
        doctest::Approx(0.0795181919126743).epsilon(1e-12));
  // Reference value computed at the full-precision temperature; the
  // truncated input shifts the 11th digit.
  CHECK(bose_occupancy(0.148427001083, omega) ==
        doctest::Approx(0.0410410805915469).epsilon(1e-9));
  CHECK(temperature_for_occupancy(1.0, omega) ==
        doctest::Approx(0.692384417772378).epsilon(1e-12));
  for (double T : {0.02, 0.1, 0.3, 1.0}) {
    CHECK(temperature_for_occupancy(bose_occupancy(T, omega), omega) ==
          doctest::Approx(T).epsilon(1e-12));
  }
}

TEST_CASE("mode occupancy mixes baths by coupling fractions") {
  ModeSystem critical;
  critical.kappa_e_mw = critical.kappa_i_mw;
  const double omega = critical.mw_frequency;
  CHECK(total_occupancy(critical, 0.15, 0.05) ==
        doctest::Approx(0.5 * bose_occupancy(0.15, omega) +
                        0.5 * bose_occupancy(0.05, omega))
            .epsilon(1e-14));

  const ModeSystem under;  // default 7.2 MHz port on a 32.4 MHz mode
  CHECK(under.eta_mw() == doctest::Approx(7.2 / 39.6).epsilon(1e-14));
  const double wi = under.kappa_i_mw / under.kappa_mw();
  const double we = under.kappa_e_mw / under.kappa_mw();
  CHECK(total_occupancy(under, 0.2, 0.02) ==
        doctest::Approx(wi * bose_occupancy(0.2, omega) +
                        we * bose_occupancy(0.02, omega))
            .epsilon(1e-14));
  // Equal baths collapse to a single Planck factor.
  CHECK(total_occupancy(under, 0.1, 0.1) ==
        doctest::Approx(bose_occupancy(0.1, omega)).epsilon(1e-14));
}

TEST_CASE("pump photon number and cooperativity") {
  ModeSystem ms;  // undercoupled microwave port
  CHECK(pump_photon_number(ms, 1e-3) ==
        doctest::Approx(1774095758.98574).epsilon(1e-12));
  CHECK(cooperativity(ms, pump_photon_number(ms, 1e-3)) ==
        doctest::Approx(0.00700934226277483).epsilon(1e-12));

  ModeSystem critical = ms;
  critical.kappa_e_mw = critical.kappa_i_mw;
  CHECK(cooperativity(critical, pump_photon_number(critical, 1e-3)) ==
        doctest::Approx(0.00428348693836240).epsilon(1e-12));

  ModeSystem strong = critical;
  strong.g = constants::kTwoPi * 200.0;
  CHECK(cooperativity(strong, pump_photon_number(strong, 1e-3)) ==
        doctest::Approx(3.12891668251453).epsilon(1e-12));

  // Both are linear in drive power.
  CHECK(pump_photon_number(ms, 2e-3) ==
        doctest::Approx(2.0 * pump_photon_number(ms, 1e-3)).epsilon(1e-14));
  CHECK(cooperativity(ms, 2e9) ==
        doctest::Approx(2.0 * cooperativity(ms, 1e9)).epsilon(1e-14));
}

TEST_CASE("channel amplitude and added noise") {
  CHECK(conversion_amplitude(0.0014, 0.5, 0.5) ==
        doctest::Approx(0.0373642638982818).epsilon(1e-12));
  CHECK(added_noise(0.0014, 0.016, 0.5) ==
        doctest::Approx(0.0638211756187633).epsilon(1e-12));

  // Unit-efficiency impedance match transmits perfectly.
  CHECK(conversion_amplitude(1.0, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(conversion_amplitude(0.5, 1.0, 1.0) < 1.0);
  CHECK(conversion_amplitude(2.0, 1.0, 1.0) < 1.0);

  // Occupancies at or below the floor count as exactly zero.
  CHECK(added_noise(0.5, 1e-9, 0.5) == 0.0);
  CHECK(added_noise(0.5, 0.0, 0.5) == 0.0);
  CHECK(added_noise(0.5, 2e-9, 0.5) > 0.0);
}

TEST_CASE("perfect channel reproduces both states exactly") {
  const NoiseInput perfect = noise(1.0, 1.0, 1.0, 0.0);
  for (auto [alpha, phi] :
       {std::pair{1.0, kPi}, {2.0, 0.5 * kPi}, {3.0, 0.0}, {1.5, 1.5 * kPi}}) {
    CHECK(fidelity(cat_state(alpha, phi), perfect) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  for (auto [alpha, r, pa] :
       {std::tuple{0.0, 0.5, 0.0}, {1.0, 1.0, 0.25 * kPi},
        {2.0, 2.0, 0.5 * kPi}, {0.5, 0.0, 0.3}}) {
    CHECK(fidelity(squeezed_state(alpha, r, pa), perfect) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("cat fidelity closed form") {
  CHECK(fidelity(cat_state(1.0, kPi), noise(0.0014, 0.5, 0.5, 0.016)) ==
        doctest::Approx(0.694716803190198).epsilon(1e-10));
  CHECK(fidelity(cat_state(1.0, kPi), noise(0.119, 0.5, 0.5, 0.001)) ==
        doctest::Approx(0.992379258049884).epsilon(1e-10));
  CHECK(fidelity(cat_state(2.0, kPi / 3.0), noise(0.3, 0.7, 0.5, 0.1)) ==
        doctest::Approx(0.189932402335590).epsilon(1e-10));
  CHECK(fidelity(cat_state(4.0, 0.0), noise(0.9, 0.9, 0.5, 0.03)) ==
        doctest::Approx(0.0601766233604788).epsilon(1e-10));
  CHECK(fidelity(cat_state(2.0, 0.0), noise(0.5, 0.8, 0.5, 0.05)) ==
        doctest::Approx(0.289624487674314).epsilon(1e-10));
  CHECK(fidelity(cat_state(1.0, kPi), noise(1e-6, 0.5, 0.5, 0.0)) ==
        doctest::Approx(0.640547624970588).epsilon(1e-10));

  // Dark-channel limit: what survives is the overlap with vacuum.
  CHECK(fidelity(cat_state(1.0, kPi), noise(0.0, 0.5, 0.5, 0.0)) ==
        doctest::Approx(0.638188596179491).epsilon(1e-10));
  CHECK(fidelity(cat_state(2.0, 0.0), noise(0.0, 0.5, 0.5, 0.0)) ==
        doctest::Approx(0.0366189934736865).epsilon(1e-10));

  CHECK(fidelity(cat_state(1.0, kPi), noise(0.119, 0.5, 0.5, 0.001)) ==
        doctest::Approx(
            fidelity_cat(cat_state(1.0, kPi), noise(0.119, 0.5, 0.5, 0.001))));
}

TEST_CASE("squeezed fidelity closed form") {
  CHECK(fidelity(squeezed_state(1.0, 0.5, 0.0),
                 noise(0.00056, 0.5, 0.5, 0.0042)) ==
        doctest::Approx(0.127712059682654).epsilon(1e-10));
  CHECK(fidelity(squeezed_state(1.0, 0.5, 0.0), noise(0.988, 0.5, 0.5, 0.019)) ==
        doctest::Approx(0.579737506829156).epsilon(1e-10));
  CHECK(fidelity(squeezed_state(1.0, 0.5, 0.5 * kPi),
                 noise(0.125, 0.5, 0.5, 0.01)) ==
        doctest::Approx(0.286666826031864).epsilon(1e-10));
  CHECK(fidelity(squeezed_state(2.0, 1.0, 0.25 * kPi),
                 noise(0.25, 0.3, 0.5, 0.05)) ==
        doctest::Approx(0.000354688338880274).epsilon(1e-10));
  CHECK(fidelity(squeezed_state(1.0, 0.5, 0.0), noise(0.0, 0.5, 0.5, 0.0)) ==
        doctest::Approx(0.120017884841667).epsilon(1e-10));

  CHECK(fidelity(squeezed_state(1.0, 0.5, 0.0), noise(0.988, 0.5, 0.5, 0.019)) ==
        doctest::Approx(fidelity_squeezed(squeezed_state(1.0, 0.5, 0.0),
                                          noise(0.988, 0.5, 0.5, 0.019))));
}

TEST_CASE("fidelity stays within the unit interval on the valid domain") {
  std::mt19937 gen(20260823);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const auto logC = [&] {
    return std::exp(std::log(1e-4) +
                    uni(gen) * (std::log(1e2) - std::log(1e-4)));
  };

  for (int k = 0; k < 1000; ++k) {
    const double alpha = 1.0 + 3.0 * uni(gen);
    const QuantumState s = cat_state(alpha, 2.0 * kPi * uni(gen));
    const NoiseInput in = noise(logC(), 0.01 + 0.99 * uni(gen),
                                0.01 + 0.99 * uni(gen),
                                uni(gen) * 0.25 / (alpha * alpha));
    const double F = fidelity(s, in);
    CHECK(F >= 0.0);
    CHECK(F <= 1.0);
  }
  for (int k = 0; k < 1000; ++k) {
    const QuantumState s =
        squeezed_state(3.0 * uni(gen), 2.0 * uni(gen), 0.5 * kPi * uni(gen));
    const NoiseInput in = noise(logC(), 0.01 + 0.99 * uni(gen),
                                0.01 + 0.99 * uni(gen), 3.0 * uni(gen));
    const double F = fidelity(s, in);
    CHECK(F >= 0.0);
    CHECK(F <= 1.0);
  }
}

TEST_CASE("thermal contamination only ever degrades the transfer") {
  const QuantumState cat = cat_state(1.0, kPi);
  double prev = 2.0;
  for (int k = 0; k <= 16; ++k) {
    const double F = fidelity(cat, noise(0.0014, 0.5, 0.5, 0.25 * k / 16.0));
    CHECK(F <= prev + 1e-12);
    prev = F;
  }
  const QuantumState sq = squeezed_state(1.0, 0.5, 0.0);
  prev = 2.0;
  for (int k = 0; k <= 16; ++k) {
    const double F = fidelity(sq, noise(0.5, 0.5, 0.5, 3.0 * k / 16.0));
    CHECK(F <= prev + 1e-12);
    prev = F;
  }
}

TEST_CASE("transfer-amplitude branches join continuously") {
  // The dark-channel expansion takes over at tiny amplitude; crossing the
  // threshold must not produce a jump.
  const QuantumState cat = cat_state(1.0, kPi);
  // eta = 1, C ~ 1e-12 puts the amplitude right at the switch point.
  const double f_lo = fidelity(cat, noise(0.9e-12, 1.0, 1.0, 0.01));
  const double f_hi = fidelity(cat, noise(1.2e-12, 1.0, 1.0, 0.01));
  CHECK(f_lo == doctest::Approx(f_hi).epsilon(1e-5));

  const QuantumState sq = squeezed_state(1.0, 0.5, 0.0);
  const double g_lo = fidelity(sq, noise(0.9e-12, 1.0, 1.0, 0.01));
  const double g_hi = fidelity(sq, noise(1.2e-12, 1.0, 1.0, 0.01));
  CHECK(g_lo == doctest::Approx(g_hi).epsilon(1e-5));
}

TEST_CASE("unphysical inputs are rejected") {
  const QuantumState cat = cat_state(1.0, kPi);
  CHECK(code_of([&] { (void)fidelity(cat, noise(-0.1, 0.5, 0.5, 0.0)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)fidelity(cat, noise(0.5, 1.5, 0.5, 0.0)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)fidelity(cat, noise(0.5, 0.5, 0.0, 0.0)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)fidelity(cat, noise(0.5, 0.5, 0.5, -1e-3)); }) ==
        ErrorCode::InvalidArgument);

  // An odd cat of zero amplitude has no norm; the dark-channel form must
  // refuse rather than divide by zero.
  CHECK(code_of([&] {
          (void)fidelity(cat_state(0.0, kPi), noise(0.0, 0.5, 0.5, 0.0));
        }) == ErrorCode::InvalidDomain);

  // Displacement angles outside the first quadrant are not meaningful for
  // the squeezed closed form.
  CHECK(code_of([&] {
          (void)fidelity(squeezed_state(1.0, 0.5, -0.1),
                         noise(0.5, 0.5, 0.5, 0.0));
        }) == ErrorCode::InvalidDomain);
  CHECK(code_of([&] {
          (void)fidelity(squeezed_state(1.0, 0.5, 2.0),
                         noise(0.5, 0.5, 0.5, 0.0));
        }) == ErrorCode::InvalidDomain);
}
