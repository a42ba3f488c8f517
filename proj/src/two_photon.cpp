#include "eomq/two_photon.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>

namespace eomq {

namespace {

std::vector<std::pair<PortMode, cplx>> flatten(const TwoPortSpectrum& s) {
  std::vector<std::pair<PortMode, cplx>> out;
  for (const auto& [mode, amp] : s.port1) out.push_back({{Port::first, mode}, amp});
  for (const auto& [mode, amp] : s.port2) out.push_back({{Port::second, mode}, amp});
  return out;
}

}  // namespace

void TwoPhotonState::add(PortMode a, PortMode b, cplx amp) {
  if (b < a) std::swap(a, b);
  amps_[{a, b}] += amp;
}

cplx TwoPhotonState::amplitude(PortMode a, PortMode b) const {
  if (b < a) std::swap(a, b);
  const auto it = amps_.find({a, b});
  return it == amps_.end() ? cplx{} : it->second;
}

double TwoPhotonState::weight(const Key& key, cplx amp) {
  return (key.first == key.second ? 2.0 : 1.0) * std::norm(amp);
}

double TwoPhotonState::norm2() const {
  double sum = 0.0;
  for (const auto& [key, amp] : amps_) sum += weight(key, amp);
  return sum;
}

SectorProbabilities TwoPhotonState::sectors() const {
  SectorProbabilities p;
  for (const auto& [key, amp] : amps_) {
    const double w = weight(key, amp);
    if (key.first.port != key.second.port)
      p.split += w;
    else if (key.first.port == Port::first)
      p.both_port1 += w;
    else
      p.both_port2 += w;
  }
  return p;
}

TwoPhotonState two_photon_output(const EOMConfig& cfg, ModeIndex n0, const Truncation& tr, Model model) {
  const auto from1 = flatten(single_photon_output(cfg, Port::first, n0, tr, model));
  const auto from2 = flatten(single_photon_output(cfg, Port::second, n0, tr, model));
  TwoPhotonState state;
  for (const auto& [x, ux] : from1)
    for (const auto& [y, vy] : from2) state.add(x, y, ux * vy);
  return state;
}

TwoPhotonState two_photon_dc_closed_form(double delta_bias, const PortSpectrum& b_row) {
  const cplx phase = std::polar(1.0, delta_bias);
  const cplx bunched = 0.5 * phase * std::sin(delta_bias);
  const cplx split = -phase * std::cos(delta_bias);
  TwoPhotonState state;
  for (const auto& [mx, bx] : b_row) {
    for (const auto& [my, by] : b_row) {
      const cplx prod = bx * by;
      state.add({Port::first, mx}, {Port::first, my}, bunched * prod);
      state.add({Port::second, mx}, {Port::second, my}, -bunched * prod);
      state.add({Port::first, mx}, {Port::second, my}, split * prod);
    }
  }
  return state;
}

std::vector<double> port_entanglement(const TwoPhotonState& state) {
  // The coefficient matrix has three blocks on disjoint rows and columns:
  // (two photons, vac), (vac, two photons) and (one photon, one photon).
  // Its singular values are the two bunched-sector norms together with the
  // singular values of the split block.
  std::map<std::int64_t, Eigen::Index> rows;
  std::map<std::int64_t, Eigen::Index> cols;
  bool has_port1_pair = false;
  bool has_port2_pair = false;
  for (const auto& [key, amp] : state.entries()) {
    if (key.first.port != key.second.port) {
      rows.emplace(key.first.mode, 0);
      cols.emplace(key.second.mode, 0);
    } else if (key.first.port == Port::first) {
      has_port1_pair = true;
    } else {
      has_port2_pair = true;
    }
  }
  Eigen::Index k = 0;
  for (auto& [mode, idx] : rows) idx = k++;
  k = 0;
  for (auto& [mode, idx] : cols) idx = k++;

  const auto sectors = state.sectors();
  std::vector<double> values;
  if (has_port1_pair) values.push_back(std::sqrt(sectors.both_port1));
  if (has_port2_pair) values.push_back(std::sqrt(sectors.both_port2));

  if (!rows.empty()) {
    Eigen::MatrixXcd split(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    split.setZero();
    for (const auto& [key, amp] : state.entries()) {
      if (key.first.port == key.second.port) continue;
      split(rows.at(key.first.mode), cols.at(key.second.mode)) = amp;
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(split);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) values.push_back(svd.singularValues()(i));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace eomq
