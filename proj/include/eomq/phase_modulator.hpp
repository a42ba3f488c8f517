#pragma once

#include <cstdint>
#include <vector>

#include "eomq/cmatrix.hpp"
#include "eomq/kernels.hpp"
#include "eomq/mode_lattice.hpp"
#include "eomq/spectrum.hpp"

namespace eomq {

// Sinusoidally driven phase modulator, V(t) = V_DC + V_m cos(Omega t + theta_rf).
struct PMConfig {
  double bias = 0.0;      // phi_b = pi V_DC / V_pi
  double index = 0.0;     // m = pi V_m / V_pi, >= 0
  double rf_phase = 0.0;  // theta_rf
  RFTone tone{1};

  void validate() const;
};

struct ToneDrive {
  double index = 0.0;
  double rf_phase = 0.0;
  RFTone tone{1};
};

// Amplitude convention for first-order multitone sidebands.
//  literal: m_k j e^{+-j theta_k}, as the small-signal multitone model is usually written
//  bessel:  (m_k / 2) j e^{+-j theta_k}, the m -> 0 limit of the single-tone J_1 amplitude
enum class SidebandConvention { literal, bessel };

// Small-signal multi-tone phase modulator. Tone indices must be distinct.
struct MultitonePMConfig {
  double bias = 0.0;
  std::vector<ToneDrive> tones;
  SidebandConvention convention = SidebandConvention::literal;

  void validate() const;
};

struct Truncation {
  double floor = 1e-12;  // orders with |J_s(m)| below this are dropped ...
  int q_margin = 8;      // ... after keeping this many extra orders on each side

  void validate() const;
};

enum class Model { exact, optical };

// C_q(q0) = e^{j phi_b} (j e^{j theta})^{q-q0} [J_{q-q0}(m) - (-1)^{q0} J_{q+q0}(m)]
cplx pm_coeff_exact(std::int64_t q, SidebandDecomposition dec, const PMConfig& cfg);
// Same amplitude with the counter-rotating J_{q+q0} term dropped.
cplx pm_coeff_optical(std::int64_t q, SidebandDecomposition dec, const PMConfig& cfg);

// Largest sideband order |s| retained by the truncation policy for index m.
int retained_half_width(double index, const Truncation& tr);

/// Output spectrum of a single photon entering the modulator in mode n0:
/// amplitudes C_q on modes qN - r0 for every retained q >= 1. Exactly-zero
/// coefficients (m = 0 off-carrier) are not stored.
PortSpectrum pm_scatter_row(ModeIndex n0, const PMConfig& cfg, const Truncation& tr = {},
                            Model model = Model::exact);

/// Brute-force realization: exponentiates the Hermitian generator
/// chi T_N + chi* T_N^dag + phi_b N_ph on modes 1..n_max (chi = e^{j theta} m / 2).
/// Entry (i, j) is the amplitude from mode j+1 to mode i+1. Columns close to
/// n_max are corrupted by the truncation edge.
CMatrix pm_generator_oracle(const PMConfig& cfg, std::int64_t n_max, Exec exec = Exec::parallel);

// Small-signal row: carrier e^{j phi_b} plus one line at n0 +- N_k per tone.
// Throws if a lower sideband falls off the positive lattice.
PortSpectrum pm_multitone_row(ModeIndex n0, const MultitonePMConfig& cfg);

}  // namespace eomq
