#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>

#include "eomq/cmatrix.hpp"
#include "eomq/kernels.hpp"
#include "eomq/phase_modulator.hpp"
#include "eomq/spectrum.hpp"
#include "eomq/splitters.hpp"

namespace eomq {

// What sits in one interferometer arm. monostate is a bare waveguide.
using ArmModulator = std::variant<std::monostate, PMConfig, MultitonePMConfig>;

// Input splitter -> (pm1 on arm 1, pm2 on arm 2) -> output splitter.
// A photon entering port 1 reaches arm 1 with t'_in and arm 2 with r'_in;
// arm 1 reaches output 1 with t'_out, arm 2 reaches output 1 with r_out.
struct EOMConfig {
  SplitterSpec splitter_in = SplitterSpec::directional_coupler(0.5);
  SplitterSpec splitter_out = SplitterSpec::directional_coupler(0.5);
  ArmModulator pm1;
  ArmModulator pm2;

  void validate() const;
};

// Single-photon (or per-displacement) amplitude row produced by one arm.
PortSpectrum arm_row(const ArmModulator& arm, ModeIndex n0, const Truncation& tr, Model model);

/// Output amplitudes for one photon in mode n0 at `input`. Each output port
/// collects the two arm rows weighted by the splitter coefficients of the
/// path taken; distinct arm tones give the union of both ladders.
TwoPortSpectrum single_photon_output(const EOMConfig& cfg, Port input, ModeIndex n0,
                                     const Truncation& tr = {}, Model model = Model::exact);

// Coherent state |alpha> in mode n0: the output is a product of coherent
// states whose displacements are alpha times the single-photon amplitudes.
TwoPortSpectrum coherent_output(const EOMConfig& cfg, Port input, ModeIndex n0, cplx alpha,
                                const Truncation& tr = {}, Model model = Model::exact);

// Same as coherent_output but insists on small-signal multitone (or bare) arms.
TwoPortSpectrum multitone_coherent_output(const EOMConfig& cfg, Port input, ModeIndex n0, cplx alpha);

enum class Preset { yb_dual, yb_single, dc_dual, dc_single, hybrid_dual, hybrid_single };

std::string_view to_string(Preset p);
Preset parse_preset(std::string_view name);

// Splitters of the named layout; dual presets carry two undriven PMs,
// single presets leave arm 2 bare.
EOMConfig preset(Preset p);

enum class SuppressedSideband { lower, upper };

// Quadrature double-sideband drive for the Y-branch dual-drive modulator.
std::pair<PMConfig, PMConfig> dsb_settings(double index, RFTone tone);
// Single-sideband drive; `side` picks the first-order sideband that cancels on port 1.
std::pair<PMConfig, PMConfig> ssb_settings(double index, RFTone tone, SuppressedSideband side);

/// Single-drive closed form: port 1 gets t'_in t'_out C_q on the PM1 ladder
/// plus r'_in r_out on the unmodulated carrier, port 2 likewise with r'_out
/// and t_out. Requires a single-tone pm1 and a bare arm 2; photon enters port 1.
TwoPortSpectrum single_drive_output(const EOMConfig& cfg, ModeIndex n0, const Truncation& tr = {},
                                    Model model = Model::exact);

/// Brute-force single-photon unitary over two ports x modes 1..n_max:
/// (output splitter x 1) (U_pm1 (+) U_pm2) (input splitter x 1), with the
/// splitters taken from their generator exponentials and the modulators from
/// pm_generator_oracle. Index = (port - 1) * n_max + (mode - 1).
/// Multitone arms are rejected.
CMatrix eom_unitary_oracle(const EOMConfig& cfg, std::int64_t n_max, Exec exec = Exec::parallel);

// Column (input, n0) of eom_unitary_oracle as a two-port spectrum (exact zeros dropped).
TwoPortSpectrum composition_oracle(const EOMConfig& cfg, Port input, ModeIndex n0, std::int64_t n_max,
                                   Exec exec = Exec::parallel);

}  // namespace eomq
