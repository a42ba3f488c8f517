#include "eomq/phase_modulator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "eomq/special_functions.hpp"

namespace eomq {

namespace {

// j^s without going through cos/sin.
cplx j_power(std::int64_t s) {
  switch (((s % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

cplx ladder_phase(std::int64_t s, const PMConfig& cfg) {
  return std::polar(1.0, cfg.bias) * j_power(s) * std::polar(1.0, cfg.rf_phase * static_cast<double>(s));
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

void PMConfig::validate() const {
  require_finite(bias, "bias phase");
  require_finite(rf_phase, "RF phase");
  require_finite(index, "modulation index");
  if (index < 0.0) throw std::invalid_argument("modulation index must be >= 0");
  if (index > kBesselMaxArgument) throw std::invalid_argument("modulation index must be <= 50");
}

void MultitonePMConfig::validate() const {
  require_finite(bias, "bias phase");
  std::set<std::int64_t> seen;
  for (const auto& t : tones) {
    require_finite(t.index, "tone modulation index");
    require_finite(t.rf_phase, "tone RF phase");
    if (t.index < 0.0) throw std::invalid_argument("tone modulation index must be >= 0");
    if (!seen.insert(t.tone.value()).second) {
      throw std::invalid_argument("multitone drive repeats RF tone N=" + std::to_string(t.tone.value()));
    }
  }
}

void Truncation::validate() const {
  if (!(floor > 0.0) || !std::isfinite(floor)) throw std::invalid_argument("truncation floor must be > 0");
  if (q_margin < 0) throw std::invalid_argument("truncation margin must be >= 0");
}

cplx pm_coeff_exact(std::int64_t q, SidebandDecomposition dec, const PMConfig& cfg) {
  if (q < 1) throw std::invalid_argument("ladder order must be >= 1");
  const auto s = q - dec.q0;
  const double image_sign = (dec.q0 % 2 == 0) ? 1.0 : -1.0;
  const double bracket = bessel_j(static_cast<int>(s), cfg.index) -
                         image_sign * bessel_j(static_cast<int>(q + dec.q0), cfg.index);
  return ladder_phase(s, cfg) * bracket;
}

cplx pm_coeff_optical(std::int64_t q, SidebandDecomposition dec, const PMConfig& cfg) {
  if (q < 1) throw std::invalid_argument("ladder order must be >= 1");
  const auto s = q - dec.q0;
  return ladder_phase(s, cfg) * bessel_j(static_cast<int>(s), cfg.index);
}

int retained_half_width(double index, const Truncation& tr) {
  tr.validate();
  if (index == 0.0) return 0;
  // |J_s(m)| decreases monotonically once s > m.
  int s = std::max(1, static_cast<int>(std::ceil(index)));
  while (std::abs(bessel_j(s, index)) >= tr.floor) ++s;
  return s + tr.q_margin;
}

PortSpectrum pm_scatter_row(ModeIndex n0, const PMConfig& cfg, const Truncation& tr, Model model) {
  cfg.validate();
  const auto dec = decompose_mode(n0, cfg.tone);
  const std::int64_t width = retained_half_width(cfg.index, tr);
  PortSpectrum row;
  for (std::int64_t q = std::max<std::int64_t>(1, dec.q0 - width); q <= dec.q0 + width; ++q) {
    const cplx c = model == Model::exact ? pm_coeff_exact(q, dec, cfg) : pm_coeff_optical(q, dec, cfg);
    if (c == cplx{}) continue;
    row.set(sideband_mode(q, cfg.tone, dec.r0), c);
  }
  return row;
}

CMatrix pm_generator_oracle(const PMConfig& cfg, std::int64_t n_max, Exec exec) {
  cfg.validate();
  if (n_max < 1) throw std::invalid_argument("lattice size must be >= 1");
  const auto n = static_cast<std::size_t>(n_max);
  const auto shift = static_cast<std::size_t>(cfg.tone.value());
  const cplx chi = std::polar(0.5 * cfg.index, cfg.rf_phase);
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = cfg.bias;
    if (i + shift < n) {
      g(i + shift, i) = chi;              // T_N: a^dag_{m+N} a_m
      g(i, i + shift) = std::conj(chi);   // T_N^dag
    }
  }
  return unitary_exp(HermitianGenerator(std::move(g)), exec);
}

PortSpectrum pm_multitone_row(ModeIndex n0, const MultitonePMConfig& cfg) {
  cfg.validate();
  const cplx carrier = std::polar(1.0, cfg.bias);
  PortSpectrum row;
  row.set(n0, carrier);
  for (const auto& t : cfg.tones) {
    const double amp = cfg.convention == SidebandConvention::literal ? t.index : 0.5 * t.index;
    const std::int64_t lower = n0.value() - t.tone.value();
    if (lower < 1) {
      throw std::domain_error("lower sideband of tone N=" + std::to_string(t.tone.value()) +
                              " falls off the lattice for n0=" + std::to_string(n0.value()));
    }
    row.add(ModeIndex(n0.value() + t.tone.value()), carrier * amp * kJ * std::polar(1.0, t.rf_phase));
    row.add(ModeIndex(lower), carrier * amp * kJ * std::polar(1.0, -t.rf_phase));
  }
  return row;
}

}  // namespace eomq
