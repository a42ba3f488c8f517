#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "eomq/eom_engine.hpp"

namespace eomq {

struct PortMode {
  Port port = Port::first;
  std::int64_t mode = 1;

  friend auto operator<=>(const PortMode&, const PortMode&) = default;
};

struct SectorProbabilities {
  double both_port1 = 0.0;  // (2, 0)
  double split = 0.0;       // (1, 1)
  double both_port2 = 0.0;  // (0, 2)

  double total() const { return both_port1 + split + both_port2; }
};

// Two-photon state sum_{x <= y} A_xy a^dag_x a^dag_y |vac> over (port, mode)
// labels. A_xy is the coefficient of the operator product, so a doubly
// occupied label carries norm weight 2 (||(a^dag)^2 |vac>||^2 = 2).
class TwoPhotonState {
 public:
  using Key = std::pair<PortMode, PortMode>;

  // Accumulates onto the unordered pair {a, b}.
  void add(PortMode a, PortMode b, cplx amp);
  cplx amplitude(PortMode a, PortMode b) const;

  const std::map<Key, cplx>& entries() const { return amps_; }
  bool empty() const { return amps_.empty(); }

  double norm2() const;
  SectorProbabilities sectors() const;

  // |A_xy|^2 scaled by the occupation weight of the pair.
  static double weight(const Key& key, cplx amp);

 private:
  std::map<Key, cplx> amps_;
};

/// One photon in mode n0 at each input port. The state is the product of the
/// two transformed creation operators (input 1 and input 2) applied to vacuum.
TwoPhotonState two_photon_output(const EOMConfig& cfg, ModeIndex n0, const Truncation& tr = {},
                                 Model model = Model::exact);

/// Balanced directional-coupler modulator with identical arms up to a bias
/// offset delta (c^dag = e^{j delta} b^dag, b_row the arm-1 scatter row):
///   (e^{j delta}/2) sin(delta) [b^dag b^dag (x) 1 - 1 (x) b^dag b^dag]
///   - e^{j delta} cos(delta) b^dag (x) b^dag
TwoPhotonState two_photon_dc_closed_form(double delta_bias, const PortSpectrum& b_row);

/// Singular values, in descending order, of the coefficient matrix indexed by
/// port-1 Fock states x port-2 Fock states. A single nonzero value means the
/// two output ports are in a product state.
std::vector<double> port_entanglement(const TwoPhotonState& state);

}  // namespace eomq
