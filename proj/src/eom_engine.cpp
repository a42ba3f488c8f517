#include "eomq/eom_engine.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace eomq {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void validate_arm(const ArmModulator& arm) {
  std::visit(overloaded{[](std::monostate) {}, [](const PMConfig& c) { c.validate(); },
                        [](const MultitonePMConfig& c) { c.validate(); }},
             arm);
}

// Amplitudes from `input` into arm 1 and arm 2.
std::pair<cplx, cplx> input_weights(const SplitterCoeffs& in, Port input) {
  if (input == Port::first) return {in.t_prime, in.r_prime};
  return {in.r, in.t};
}

TwoPortSpectrum recombine(const SplitterCoeffs& in, const SplitterCoeffs& out, Port input,
                          const PortSpectrum& arm1, const PortSpectrum& arm2) {
  const auto [w1, w2] = input_weights(in, input);
  TwoPortSpectrum res;
  res.port1 = combine(w1 * out.t_prime, arm1, w2 * out.r, arm2).pruned();
  res.port2 = combine(w1 * out.r_prime, arm1, w2 * out.t, arm2).pruned();
  return res;
}

CMatrix arm_unitary(const ArmModulator& arm, std::int64_t n_max, Exec exec) {
  if (std::holds_alternative<std::monostate>(arm)) return CMatrix::identity(static_cast<std::size_t>(n_max));
  if (const auto* pm = std::get_if<PMConfig>(&arm)) return pm_generator_oracle(*pm, n_max, exec);
  throw std::invalid_argument("composition oracle supports single-tone or bare arms only");
}

// (2x2 amplitude map) x identity on n modes.
CMatrix splitter_on_lattice(const SplitterSpec& spec, std::size_t n) {
  const CMatrix amp = splitter_generator_oracle(spec).transpose();
  CMatrix big(2 * n, 2 * n);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t i = 0; i < n; ++i) big(a * n + i, b * n + i) = amp(a, b);
  return big;
}

}  // namespace

void EOMConfig::validate() const {
  splitter_in.validate();
  splitter_out.validate();
  validate_arm(pm1);
  validate_arm(pm2);
}

PortSpectrum arm_row(const ArmModulator& arm, ModeIndex n0, const Truncation& tr, Model model) {
  return std::visit(overloaded{[&](std::monostate) {
                                 PortSpectrum row;
                                 row.set(n0, 1.0);
                                 return row;
                               },
                               [&](const PMConfig& c) { return pm_scatter_row(n0, c, tr, model); },
                               [&](const MultitonePMConfig& c) { return pm_multitone_row(n0, c); }},
                    arm);
}

TwoPortSpectrum single_photon_output(const EOMConfig& cfg, Port input, ModeIndex n0, const Truncation& tr,
                                     Model model) {
  cfg.validate();
  const auto in = splitter_coeffs(cfg.splitter_in);
  const auto out = splitter_coeffs(cfg.splitter_out);
  return recombine(in, out, input, arm_row(cfg.pm1, n0, tr, model), arm_row(cfg.pm2, n0, tr, model));
}

TwoPortSpectrum coherent_output(const EOMConfig& cfg, Port input, ModeIndex n0, cplx alpha,
                                const Truncation& tr, Model model) {
  return single_photon_output(cfg, input, n0, tr, model).scaled(alpha);
}

TwoPortSpectrum multitone_coherent_output(const EOMConfig& cfg, Port input, ModeIndex n0, cplx alpha) {
  if (std::holds_alternative<PMConfig>(cfg.pm1) || std::holds_alternative<PMConfig>(cfg.pm2)) {
    throw std::invalid_argument("multitone output needs multitone or bare arms");
  }
  return coherent_output(cfg, input, n0, alpha);
}

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::yb_dual:
      return "yb_dual";
    case Preset::yb_single:
      return "yb_single";
    case Preset::dc_dual:
      return "dc_dual";
    case Preset::dc_single:
      return "dc_single";
    case Preset::hybrid_dual:
      return "hybrid_dual";
    case Preset::hybrid_single:
      return "hybrid_single";
  }
  return "?";
}

Preset parse_preset(std::string_view name) {
  for (auto p : {Preset::yb_dual, Preset::yb_single, Preset::dc_dual, Preset::dc_single, Preset::hybrid_dual,
                 Preset::hybrid_single}) {
    if (to_string(p) == name) return p;
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

EOMConfig preset(Preset p) {
  // Y-branch input: r'_in = 1/sqrt2 = -r_in. As the output combiner the
  // branch is mirrored: r_out = 1/sqrt2 = -r'_out.
  const auto yb_in = SplitterSpec::y_branch(0.5);
  const auto yb_out = SplitterSpec::y_branch(0.5).with_mirror();
  const auto dc = SplitterSpec::directional_coupler(0.5);

  EOMConfig cfg;
  switch (p) {
    case Preset::yb_dual:
    case Preset::yb_single:
      cfg.splitter_in = yb_in;
      cfg.splitter_out = yb_out;
      break;
    case Preset::dc_dual:
    case Preset::dc_single:
      cfg.splitter_in = dc;
      cfg.splitter_out = dc;
      break;
    case Preset::hybrid_dual:
    case Preset::hybrid_single:
      cfg.splitter_in = yb_in;
      cfg.splitter_out = dc;
      break;
  }
  cfg.pm1 = PMConfig{};
  const bool dual = p == Preset::yb_dual || p == Preset::dc_dual || p == Preset::hybrid_dual;
  if (dual) cfg.pm2 = PMConfig{};
  return cfg;
}

std::pair<PMConfig, PMConfig> dsb_settings(double index, RFTone tone) {
  return {PMConfig{kPi / 2, index, 0.0, tone}, PMConfig{-kPi / 2, index, kPi, tone}};
}

std::pair<PMConfig, PMConfig> ssb_settings(double index, RFTone tone, SuppressedSideband side) {
  const double theta2 = side == SuppressedSideband::lower ? kPi / 2 : -kPi / 2;
  return {PMConfig{kPi / 2, index, 0.0, tone}, PMConfig{0.0, index, theta2, tone}};
}

TwoPortSpectrum single_drive_output(const EOMConfig& cfg, ModeIndex n0, const Truncation& tr, Model model) {
  cfg.validate();
  const auto* pm = std::get_if<PMConfig>(&cfg.pm1);
  if (pm == nullptr || !std::holds_alternative<std::monostate>(cfg.pm2)) {
    throw std::invalid_argument("single-drive output needs a single-tone pm1 and a bare arm 2");
  }
  const auto in = splitter_coeffs(cfg.splitter_in);
  const auto out = splitter_coeffs(cfg.splitter_out);
  const PortSpectrum ladder = pm_scatter_row(n0, *pm, tr, model);

  TwoPortSpectrum res;
  res.port1 = ladder.scaled(in.t_prime * out.t_prime);
  res.port1.add(n0, in.r_prime * out.r);
  res.port2 = ladder.scaled(in.t_prime * out.r_prime);
  res.port2.add(n0, in.r_prime * out.t);
  res.port1 = res.port1.pruned();
  res.port2 = res.port2.pruned();
  return res;
}

CMatrix eom_unitary_oracle(const EOMConfig& cfg, std::int64_t n_max, Exec exec) {
  cfg.validate();
  if (n_max < 1) throw std::invalid_argument("lattice size must be >= 1");
  const auto n = static_cast<std::size_t>(n_max);

  const CMatrix u1 = arm_unitary(cfg.pm1, n_max, exec);
  const CMatrix u2 = arm_unitary(cfg.pm2, n_max, exec);
  CMatrix arms(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      arms(i, j) = u1(i, j);
      arms(n + i, n + j) = u2(i, j);
    }
  }
  const CMatrix after_arms = kernels::matmul(arms, splitter_on_lattice(cfg.splitter_in, n), exec);
  return kernels::matmul(splitter_on_lattice(cfg.splitter_out, n), after_arms, exec);
}

TwoPortSpectrum composition_oracle(const EOMConfig& cfg, Port input, ModeIndex n0, std::int64_t n_max, Exec exec) {
  if (n0.value() > n_max) throw std::invalid_argument("input mode lies outside the oracle lattice");
  const CMatrix u = eom_unitary_oracle(cfg, n_max, exec);
  const auto n = static_cast<std::size_t>(n_max);
  const std::size_t col = (input == Port::first ? 0 : n) + static_cast<std::size_t>(n0.value() - 1);
  TwoPortSpectrum res;
  for (std::size_t i = 0; i < n; ++i) {
    const auto mode = ModeIndex(static_cast<std::int64_t>(i + 1));
    if (u(i, col) != cplx{}) res.port1.set(mode, u(i, col));
    if (u(n + i, col) != cplx{}) res.port2.set(mode, u(n + i, col));
  }
  return res;
}

}  // namespace eomq
