#include "eomq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "eomq/eom_engine.hpp"
#include "eomq/mean_field.hpp"
#include "eomq/special_functions.hpp"
#include "eomq/two_photon.hpp"

namespace eomq {

namespace {

constexpr double kPi = std::numbers::pi;

// Tracks the worst ratio deviation / tolerance seen by one check.
class Worst {
 public:
  explicit Worst(double scale) : scale_(scale) {}

  void below(double value, double tol) {
    const double allowed = tol * scale_;
    if (!(value <= allowed)) ok_ = false;
    const double ratio = value / allowed;
    if (!(ratio <= ratio_)) {
      ratio_ = ratio;
      worst_ = value;
      tol_ = allowed;
    }
  }
  void require(bool cond) {
    if (!cond) ok_ = false;
  }

  CheckResult result(std::string name) const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst %.3e (allowed %.1e)", worst_, tol_);
    return {std::move(name), ok_, buf};
  }

 private:
  double scale_;
  double ratio_ = -1.0;
  double worst_ = 0.0;
  double tol_ = 0.0;
  bool ok_ = true;
};

cplx inner(const PortSpectrum& a, const PortSpectrum& b) {
  cplx acc{};
  for (const auto& [mode, amp] : a) acc += amp * std::conj(b.at(mode));
  return acc;
}

CheckResult splitter_laws(double scale) {
  Worst w(scale);
  for (int i = 0; i <= 10; ++i) {
    const double k = 0.1 * i;
    for (const auto& spec : {SplitterSpec::bulk(kPi * k), SplitterSpec::directional_coupler(k),
                             SplitterSpec::y_branch(k)}) {
      const auto c = splitter_coeffs(spec);
      const auto rep = verify_reciprocity(c, 1e-14 * scale);
      w.below(std::max({rep.port1_defect, rep.port2_defect, rep.cross_defect}), 1e-14);
      w.below(max_abs_diff(splitter_generator_oracle(spec), heisenberg_matrix(c)), 1e-12);
    }
  }
  return w.result("splitter laws");
}

CheckResult pm_unitarity(double scale) {
  Worst w(scale);
  for (double m : {0.5, 1.0, 2.0})
    for (std::int64_t big_n : {1, 3, 7})
      for (std::int64_t q0 : {20, 40}) {
        const PMConfig cfg{0.3, m, 0.8, RFTone(big_n)};
        const ModeIndex n0(q0 * big_n);
        const auto row = pm_scatter_row(n0, cfg);
        w.below(std::abs(row.norm2() - 1.0), 1e-10);
        for (std::int64_t step : {1, 2}) {
          const auto other = pm_scatter_row(ModeIndex(n0.value() + step * big_n), cfg);
          w.below(std::abs(inner(row, other)), 1e-8);
        }
      }
  return w.result("phase modulator unitarity");
}

CheckResult generator_oracle(double scale, Exec exec) {
  Worst w(scale);
  const PMConfig cases[] = {{0.3, 1.0, 0.7, RFTone(3)}, {-1.1, 2.0, 2.2, RFTone(1)}, {0.0, 0.5, 0.0, RFTone(2)}};
  const std::int64_t starts[] = {30, 25, 41};
  for (std::size_t c = 0; c < 3; ++c) {
    const auto& cfg = cases[c];
    const ModeIndex n0(starts[c]);
    const std::int64_t big_n = cfg.tone.value();
    const CMatrix u = pm_generator_oracle(cfg, n0.value() + 20 * big_n, exec);
    const auto dec = decompose_mode(n0, cfg.tone);
    for (std::int64_t q = std::max<std::int64_t>(1, dec.q0 - 10); q <= dec.q0 + 10; ++q) {
      const auto mode = sideband_mode(q, cfg.tone, dec.r0).value();
      w.below(std::abs(u(static_cast<std::size_t>(mode - 1), static_cast<std::size_t>(n0.value() - 1)) -
                       pm_coeff_exact(q, dec, cfg)),
              1e-8);
    }
  }
  return w.result("operator exponential oracle");
}

CheckResult optical_limit(double scale) {
  Worst w(scale);
  for (double m : {0.1, 1.0, 2.0})
    for (std::int64_t q0 : {20, 35}) {
      const PMConfig cfg{0.4, m, -0.3, RFTone(2)};
      const ModeIndex n0(2 * q0 - 1);
      const auto exact = pm_scatter_row(n0, cfg, {}, Model::exact);
      const auto optical = pm_scatter_row(n0, cfg, {}, Model::optical);
      w.below(max_abs_diff(exact, optical), 1e-15);
    }
  return w.result("optical limit");
}

EOMConfig dual(Preset p, const PMConfig& a, const PMConfig& b) {
  auto cfg = preset(p);
  cfg.pm1 = a;
  cfg.pm2 = b;
  return cfg;
}

CheckResult dsb(double scale) {
  Worst w(scale);
  const ModeIndex n0(100);
  for (double m : {0.1, 0.5, 1.0}) {
    const auto [a, b] = dsb_settings(m, RFTone(3));
    const auto out = single_photon_output(dual(Preset::yb_dual, a, b), Port::first, n0, {}, Model::optical);
    for (const auto& [mode, amp] : out.port1)
      if (((mode - n0.value()) / 3) % 2 == 0) w.below(std::abs(amp), 1e-14);
  }
  return w.result("double sideband parity");
}

CheckResult ssb(double scale) {
  Worst w(scale);
  const ModeIndex n0(100);
  for (double m : {0.1, 0.5, 1.0, 2.0}) {
    for (auto side : {SuppressedSideband::lower, SuppressedSideband::upper}) {
      const auto [a, b] = ssb_settings(m, RFTone(3), side);
      const auto out = single_photon_output(dual(Preset::yb_dual, a, b), Port::first, n0, {}, Model::optical);
      const std::int64_t mode = side == SuppressedSideband::lower ? 97 : 103;
      w.below(std::abs(out.port1.at(mode)), 1e-14);
    }
  }
  return w.result("single sideband cancellation");
}

SplitterSpec random_splitter(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const bool mirrored = rng() % 2 == 0;
  switch (rng() % 3) {
    case 0: return SplitterSpec::bulk(2 * kPi * unit(rng)).with_mirror(mirrored);
    case 1: return SplitterSpec::directional_coupler(unit(rng)).with_mirror(mirrored);
    default: return SplitterSpec::y_branch(unit(rng)).with_mirror(mirrored);
  }
}

CheckResult norm_conservation(double scale, Exec exec) {
  Worst w(scale);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    EOMConfig cfg;
    cfg.splitter_in = random_splitter(rng);
    cfg.splitter_out = random_splitter(rng);
    const std::int64_t n1 = 1 + static_cast<std::int64_t>(rng() % 3);
    const std::int64_t n2 = trial % 2 == 0 ? n1 : 1 + static_cast<std::int64_t>(rng() % 3);
    cfg.pm1 = PMConfig{2 * kPi * unit(rng), 2 * unit(rng), 2 * kPi * unit(rng), RFTone(n1)};
    cfg.pm2 = PMConfig{2 * kPi * unit(rng), 2 * unit(rng), 2 * kPi * unit(rng), RFTone(n2)};
    const ModeIndex n0(20 + static_cast<std::int64_t>(rng() % 21));
    const Port input = rng() % 2 == 0 ? Port::first : Port::second;
    const auto closed = single_photon_output(cfg, input, n0);
    w.below(std::abs(closed.norm2() - 1.0), 1e-8);
    const auto oracle = composition_oracle(cfg, input, n0, n0.value() + 22 * std::max(n1, n2), exec);
    w.below(max_abs_diff(closed, oracle), 1e-8);
  }
  return w.result("single photon norm and composition");
}

CheckResult coherent(double scale) {
  Worst w(scale);
  const cplx alphas[] = {{1.0, 0.0}, {0.3, -2.1}, {0.0, 0.0}, {-4.0, 0.5}};
  for (Preset p : {Preset::yb_dual, Preset::dc_dual, Preset::hybrid_dual}) {
    const auto cfg = dual(p, PMConfig{0.2, 1.3, 0.1, RFTone(2)}, PMConfig{-0.7, 0.6, 1.9, RFTone(3)});
    const ModeIndex n0(45);
    const auto single = single_photon_output(cfg, Port::first, n0);
    for (const cplx alpha : alphas) {
      const auto disp = coherent_output(cfg, Port::first, n0, alpha);
      for (Port port : {Port::first, Port::second})
        for (const auto& [mode, amp] : single.port(port))
          w.below(std::abs(disp.port(port).at(mode) - alpha * amp), 1e-14);
      w.below(std::abs(disp.norm2() - std::norm(alpha)), 1e-10);
    }
  }
  return w.result("coherent correspondence");
}

CheckResult two_photon(double scale) {
  Worst w(scale);
  for (Preset p : {Preset::yb_dual, Preset::dc_dual})
    w.require(two_photon_cross_weight(splitter_coeffs(preset(p).splitter_in)) == cplx{});
  const ModeIndex n0(40);
  for (int i = 0; i <= 4; ++i) {
    const double delta = i * kPi / 8;
    const auto cfg = dual(Preset::dc_dual, PMConfig{0.2, 1.1, 0.5, RFTone(2)},
                          PMConfig{0.2 + delta, 1.1, 0.5, RFTone(2)});
    const auto state = two_photon_output(cfg, n0);
    w.below(std::abs(state.norm2() - 1.0), 1e-10);
    const auto sec = state.sectors();
    w.below(std::abs(sec.split - std::pow(std::cos(delta), 2)), 1e-10);
    if (i == 0) {
      const auto sv = port_entanglement(state);
      w.below(sv.size() > 1 ? sv[1] : 0.0, 1e-12);
    }
    if (i == 4) {
      for (const auto& [key, amp] : state.entries())
        if (key.first.port != key.second.port) w.below(std::abs(amp), 1e-14);
    }
  }
  return w.result("two photon interference");
}

CheckResult multitone(double scale) {
  Worst w(scale);
  const double m = 1e-3;
  for (auto convention : {SidebandConvention::literal, SidebandConvention::bessel}) {
    const MultitonePMConfig mt{0.6, {{m, 0.9, RFTone(4)}}, convention};
    const auto small = pm_multitone_row(ModeIndex(81), mt);
    const auto full = pm_scatter_row(ModeIndex(81), PMConfig{0.6, m, 0.9, RFTone(4)});
    const double norm = convention == SidebandConvention::literal ? 0.5 : 1.0;
    for (std::int64_t mode : {77, 85})
      w.below(std::abs(norm * small.at(mode) - full.at(mode)) / std::abs(full.at(mode)), 1e-5);
  }

  auto cfg = preset(Preset::yb_dual);
  cfg.pm1 = MultitonePMConfig{0.5, {{0.01, 0.0, RFTone(3)}, {0.02, 1.0, RFTone(5)}}};
  cfg.pm2 = MultitonePMConfig{-0.5, {{0.01, 0.3, RFTone(3)}, {0.02, -1.0, RFTone(5)}}};
  const auto disp = multitone_coherent_output(cfg, Port::first, ModeIndex(60), {2.0, 0.5});
  const FieldUnits units{1.0, 2 * kPi, 0.7};
  const double times[] = {0.0, 0.25, 0.5};
  const auto series = mean_field(disp, Port::first, times, units, Exec::serial);
  w.require(series.terms.size() == disp.port1.size());
  for (const auto& term : series.terms) {
    const cplx expected = kJ * (units.field_scale * std::sqrt(term.omega)) * disp.port1.at(term.mode);
    w.require(term.phasor == expected);
  }
  return w.result("multitone consistency");
}

}  // namespace

std::vector<CheckResult> run_verification(double tolerance_scale, Exec exec) {
  if (!(tolerance_scale >= 1.0) || !std::isfinite(tolerance_scale))
    throw std::invalid_argument("tolerance scale must be a finite number >= 1");
  std::vector<CheckResult> out;
  out.push_back(splitter_laws(tolerance_scale));
  out.push_back(pm_unitarity(tolerance_scale));
  out.push_back(generator_oracle(tolerance_scale, exec));
  out.push_back(optical_limit(tolerance_scale));
  out.push_back(dsb(tolerance_scale));
  out.push_back(ssb(tolerance_scale));
  out.push_back(norm_conservation(tolerance_scale, exec));
  out.push_back(coherent(tolerance_scale));
  out.push_back(two_photon(tolerance_scale));
  out.push_back(multitone(tolerance_scale));
  return out;
}

}  // namespace eomq
