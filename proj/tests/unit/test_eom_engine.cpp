#include "eomq/eom_engine.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace eomq;

namespace {

constexpr double kPi = std::numbers::pi;

EOMConfig dual(Preset p, const PMConfig& a, const PMConfig& b) {
  auto cfg = preset(p);
  cfg.pm1 = a;
  cfg.pm2 = b;
  return cfg;
}

std::int64_t order_of(std::int64_t mode, std::int64_t n0, std::int64_t big_n) { return (mode - n0) / big_n; }

}  // namespace

TEST(eom_engine, idle_yb_modulator_is_transparent) {
  const auto cfg = dual(Preset::yb_dual, PMConfig{}, PMConfig{});
  const auto out = single_photon_output(cfg, Port::first, ModeIndex(25));
  ASSERT_EQ(out.port1.size(), 1u);
  EXPECT_LT(std::abs(out.port1.at(25) - 1.0), 1e-15);
  EXPECT_TRUE(out.port2.empty());
}

TEST(eom_engine, yb_dual_weights) {
  const PMConfig a{0.3, 0.9, 0.1, RFTone(2)};
  const PMConfig b{-1.0, 0.4, 2.0, RFTone(2)};
  const ModeIndex n0(41);
  const auto out = single_photon_output(dual(Preset::yb_dual, a, b), Port::first, n0);
  const auto ca = pm_scatter_row(n0, a);
  const auto cb = pm_scatter_row(n0, b);
  for (const auto& [mode, amp] : ca) {
    EXPECT_LT(std::abs(out.port1.at(mode) - 0.5 * (amp + cb.at(mode))), 1e-15);
    EXPECT_LT(std::abs(out.port2.at(mode) - 0.5 * (-amp + cb.at(mode))), 1e-15);
  }
}

TEST(eom_engine, hybrid_dual_weights) {
  const PMConfig a{0.3, 0.9, 0.1, RFTone(2)};
  const PMConfig b{-1.0, 0.4, 2.0, RFTone(2)};
  const ModeIndex n0(41);
  const auto out = single_photon_output(dual(Preset::hybrid_dual, a, b), Port::first, n0);
  const auto ca = pm_scatter_row(n0, a);
  const auto cb = pm_scatter_row(n0, b);
  for (const auto& [mode, amp] : ca) {
    EXPECT_LT(std::abs(out.port1.at(mode) - 0.5 * (amp + kJ * cb.at(mode))), 1e-15);
    EXPECT_LT(std::abs(out.port2.at(mode) - 0.5 * (kJ * amp + cb.at(mode))), 1e-15);
  }
}

TEST(eom_engine, dsb_quadrature) {
  for (double m : {0.1, 0.5, 1.0}) {
    const auto [a, b] = dsb_settings(m, RFTone(3));
    const ModeIndex n0(100);
    const auto cfg = dual(Preset::yb_dual, a, b);
    for (Model model : {Model::optical, Model::exact}) {
      const auto out = single_photon_output(cfg, Port::first, n0, {}, model);
      const auto c = pm_scatter_row(n0, a, {}, model);
      for (const auto& [mode, amp] : c) {
        EXPECT_LT(std::abs(out.port1.at(mode) - amp.real()), 1e-15);
        EXPECT_LT(std::abs(out.port2.at(mode) + kJ * amp.imag()), 1e-15);
        if (order_of(mode, 100, 3) % 2 == 0) EXPECT_LT(std::abs(out.port1.at(mode)), 1e-14);
      }
    }
  }
}

TEST(eom_engine, ssb_cancels_one_sideband) {
  const ModeIndex n0(100);
  for (double m : {0.1, 0.7, 1.8}) {
    const auto [a, b] = ssb_settings(m, RFTone(3), SuppressedSideband::lower);
    const auto dec = decompose_mode(n0, RFTone(3));
    EXPECT_LT(std::abs(pm_coeff_optical(dec.q0 - 1, dec, b) + pm_coeff_optical(dec.q0 - 1, dec, a)), 1e-15);
    const auto low = single_photon_output(dual(Preset::yb_dual, a, b), Port::first, n0, {}, Model::optical);
    EXPECT_LT(std::abs(low.port1.at(97)), 1e-14);
    EXPECT_GT(std::abs(low.port1.at(103)), 1e-3);

    const auto [c, d] = ssb_settings(m, RFTone(3), SuppressedSideband::upper);
    const auto up = single_photon_output(dual(Preset::yb_dual, c, d), Port::first, n0, {}, Model::optical);
    EXPECT_LT(std::abs(up.port1.at(103)), 1e-14);
    EXPECT_GT(std::abs(up.port1.at(97)), 1e-3);
  }
}

TEST(eom_engine, single_drive_closed_form) {
  auto cfg = preset(Preset::yb_single);
  cfg.pm1 = PMConfig{0.0, 0.0, 0.0, RFTone(2)};
  const auto idle = single_drive_output(cfg, ModeIndex(30));
  EXPECT_LT(std::abs(idle.port1.at(30) - 1.0), 1e-15);
  EXPECT_TRUE(idle.port2.empty());

  cfg.pm1 = PMConfig{kPi, 0.0, 0.0, RFTone(2)};
  const auto flipped = single_drive_output(cfg, ModeIndex(30));
  EXPECT_TRUE(flipped.port1.pruned(1e-15).empty());
  EXPECT_LT(std::abs(flipped.port2.at(30) - 1.0), 1e-15);

  cfg.pm1 = PMConfig{0.4, 1.3, 0.2, RFTone(2)};
  const auto out = single_drive_output(cfg, ModeIndex(30));
  const auto oracle = composition_oracle(cfg, Port::first, ModeIndex(30), 30 + 25 * 2);
  EXPECT_LT(max_abs_diff(out, oracle), 1e-10);
  EXPECT_LT(max_abs_diff(out, single_photon_output(cfg, Port::first, ModeIndex(30))), 1e-15);

  cfg.pm2 = PMConfig{};
  EXPECT_THROW(single_drive_output(cfg, ModeIndex(30)), std::invalid_argument);
}

TEST(eom_engine, matches_composition_oracle_on_random_configs) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const SplitterKind kinds[] = {SplitterKind::bulk, SplitterKind::directional_coupler, SplitterKind::y_branch};
  auto random_splitter = [&] {
    const auto kind = kinds[rng() % 3];
    const double v = kind == SplitterKind::bulk ? 2 * kPi * unit(rng) : unit(rng);
    return SplitterSpec{kind, v, rng() % 2 == 0};
  };
  for (int trial = 0; trial < 8; ++trial) {
    EOMConfig cfg;
    cfg.splitter_in = random_splitter();
    cfg.splitter_out = random_splitter();
    const std::int64_t n1 = 1 + static_cast<std::int64_t>(rng() % 3);
    const std::int64_t n2 = trial % 2 == 0 ? n1 : 1 + static_cast<std::int64_t>(rng() % 3);
    cfg.pm1 = PMConfig{2 * kPi * unit(rng), 2 * unit(rng), 2 * kPi * unit(rng), RFTone(n1)};
    cfg.pm2 = PMConfig{2 * kPi * unit(rng), 2 * unit(rng), 2 * kPi * unit(rng), RFTone(n2)};
    const ModeIndex n0(20 + static_cast<std::int64_t>(rng() % 10));
    const Port input = trial % 3 == 0 ? Port::second : Port::first;
    const auto closed = single_photon_output(cfg, input, n0);
    const auto oracle = composition_oracle(cfg, input, n0, n0.value() + 25 * std::max(n1, n2));
    EXPECT_NEAR(closed.norm2(), 1.0, 1e-10);
    EXPECT_NEAR(oracle.norm2(), 1.0, 1e-10);
    EXPECT_LT(max_abs_diff(closed, oracle), 1e-10) << "trial " << trial;
  }
}

TEST(eom_engine, distinct_tones_support_is_union_of_ladders) {
  auto cfg = dual(Preset::dc_dual, PMConfig{0.2, 0.8, 0.0, RFTone(3)}, PMConfig{-0.5, 1.1, 0.3, RFTone(5)});
  const ModeIndex n0(61);
  const auto out = single_photon_output(cfg, Port::first, n0);
  const auto l1 = pm_scatter_row(n0, std::get<PMConfig>(cfg.pm1));
  const auto l2 = pm_scatter_row(n0, std::get<PMConfig>(cfg.pm2));
  for (const auto* port : {&out.port1, &out.port2}) {
    for (const auto& [mode, amp] : *port) EXPECT_TRUE(l1.contains(mode) || l2.contains(mode)) << mode;
    for (const auto& [mode, amp] : l1) EXPECT_TRUE(port->contains(mode) || mode == 61) << mode;
    for (const auto& [mode, amp] : l2) EXPECT_TRUE(port->contains(mode) || mode == 61) << mode;
  }
}

TEST(eom_engine, identity_arms_are_a_pure_interferometer) {
  EOMConfig cfg;
  cfg.splitter_in = SplitterSpec::bulk(1.1);
  cfg.splitter_out = SplitterSpec::y_branch(0.3);
  const auto oracle = composition_oracle(cfg, Port::second, ModeIndex(4), 8);
  const CMatrix mzi = kernels::matmul(transfer_matrix(splitter_coeffs(cfg.splitter_out)),
                                      transfer_matrix(splitter_coeffs(cfg.splitter_in)));
  EXPECT_EQ(oracle.port1.size(), 1u);
  EXPECT_LT(std::abs(oracle.port1.at(4) - mzi(0, 1)), 1e-14);
  EXPECT_LT(std::abs(oracle.port2.at(4) - mzi(1, 1)), 1e-14);
}

TEST(eom_engine, dc_dual_idle_against_oracle) {
  const auto cfg = dual(Preset::dc_dual, PMConfig{0.6, 0.0, 0.0, RFTone(1)}, PMConfig{0.6, 0.0, 0.0, RFTone(1)});
  const auto closed = single_photon_output(cfg, Port::first, ModeIndex(5));
  const auto oracle = composition_oracle(cfg, Port::first, ModeIndex(5), 10);
  EXPECT_LT(max_abs_diff(closed, oracle), 1e-12);
}

TEST(eom_engine, coherent_correspondence) {
  const auto cfg = dual(Preset::hybrid_dual, PMConfig{0.2, 1.4, 0.5, RFTone(2)}, PMConfig{1.2, 0.6, -0.5, RFTone(2)});
  const ModeIndex n0(33);
  const cplx alpha{0.8, -1.3};
  const auto single = single_photon_output(cfg, Port::first, n0);
  const auto coh = coherent_output(cfg, Port::first, n0, alpha);
  for (const auto& [mode, amp] : single.port1) EXPECT_LT(std::abs(coh.port1.at(mode) - alpha * amp), 1e-14);
  for (const auto& [mode, amp] : single.port2) EXPECT_LT(std::abs(coh.port2.at(mode) - alpha * amp), 1e-14);
  EXPECT_NEAR(coh.norm2(), std::norm(alpha), 1e-10);

  const auto vac = coherent_output(cfg, Port::first, n0, 0.0);
  EXPECT_EQ(vac.norm2(), 0.0);
}

TEST(eom_engine, presets) {
  EXPECT_EQ(parse_preset("hybrid_single"), Preset::hybrid_single);
  EXPECT_THROW(parse_preset("mzm"), std::invalid_argument);
  const auto yb = preset(Preset::yb_dual);
  const auto in = splitter_coeffs(yb.splitter_in);
  const auto out = splitter_coeffs(yb.splitter_out);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(in.r_prime.real(), h, 1e-15);
  EXPECT_NEAR(in.r.real(), -h, 1e-15);
  EXPECT_NEAR(out.r.real(), h, 1e-15);
  EXPECT_NEAR(out.r_prime.real(), -h, 1e-15);
  EXPECT_TRUE(std::holds_alternative<std::monostate>(preset(Preset::dc_single).pm2));
  EXPECT_TRUE(std::holds_alternative<PMConfig>(preset(Preset::dc_dual).pm2));
}

TEST(eom_engine, multitone_outputs) {
  auto cfg = preset(Preset::yb_dual);
  cfg.pm1 = MultitonePMConfig{0.3, {}};
  cfg.pm2 = MultitonePMConfig{-0.2, {}};
  const cplx alpha{1.5, 0.5};
  const auto mt0 = multitone_coherent_output(cfg, Port::first, ModeIndex(50), alpha);
  const auto ref = coherent_output(dual(Preset::yb_dual, PMConfig{0.3, 0.0, 0.0, RFTone(4)},
                                        PMConfig{-0.2, 0.0, 0.0, RFTone(4)}),
                                   Port::first, ModeIndex(50), alpha);
  EXPECT_LT(max_abs_diff(mt0, ref), 1e-14);

  cfg.pm1 = MultitonePMConfig{0.3, {{1e-3, 0.1, RFTone(3)}, {2e-3, 0.4, RFTone(7)}}};
  cfg.pm2 = MultitonePMConfig{-0.2, {{1e-3, 1.1, RFTone(3)}, {2e-3, -0.4, RFTone(7)}}};
  const auto two = multitone_coherent_output(cfg, Port::first, ModeIndex(50), alpha);
  EXPECT_EQ(two.port1.size(), 5u);

  auto mixed = cfg;
  mixed.pm2 = PMConfig{};
  EXPECT_THROW(multitone_coherent_output(mixed, Port::first, ModeIndex(50), alpha), std::invalid_argument);
  EXPECT_THROW(composition_oracle(cfg, Port::first, ModeIndex(50), 80), std::invalid_argument);
}

TEST(eom_engine, multitone_small_signal_matches_exact) {
  const double m = 1e-3;
  auto mt = preset(Preset::yb_dual);
  mt.pm1 = MultitonePMConfig{0.4, {{m, 0.3, RFTone(3)}}, SidebandConvention::bessel};
  mt.pm2 = MultitonePMConfig{-0.9, {{m, 2.0, RFTone(3)}}, SidebandConvention::bessel};
  const auto exact = coherent_output(dual(Preset::yb_dual, PMConfig{0.4, m, 0.3, RFTone(3)},
                                          PMConfig{-0.9, m, 2.0, RFTone(3)}),
                                     Port::first, ModeIndex(60), 2.0);
  const auto small = multitone_coherent_output(mt, Port::first, ModeIndex(60), 2.0);
  for (std::int64_t mode : {57, 60, 63}) {
    for (Port p : {Port::first, Port::second}) {
      const cplx e = exact.port(p).at(mode);
      EXPECT_LT(std::abs(small.port(p).at(mode) - e) / std::abs(e), 1e-5) << mode;
    }
  }
}
