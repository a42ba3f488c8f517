#pragma once

#include <cstdint>
#include <map>

#include "eomq/cmatrix.hpp"
#include "eomq/mode_lattice.hpp"

namespace eomq {

enum class Port { first = 1, second = 2 };

inline int port_number(Port p) { return static_cast<int>(p); }
Port port_from_number(int n);

// Complex amplitude per lattice mode for one port. Keys are mode numbers >= 1
// kept in ascending order so iteration (and serialization) is deterministic.
class PortSpectrum {
 public:
  using Map = std::map<std::int64_t, cplx>;

  PortSpectrum() = default;

  // Accumulates amp onto the mode's current amplitude.
  void add(ModeIndex mode, cplx amp);
  void set(ModeIndex mode, cplx amp);
  // Amplitude at mode, zero when the mode is absent.
  cplx at(std::int64_t mode) const;
  bool contains(std::int64_t mode) const { return entries_.contains(mode); }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  double norm2() const;
  PortSpectrum scaled(cplx factor) const;
  // Drops entries whose magnitude is <= threshold (threshold 0 drops exact zeros).
  PortSpectrum pruned(double threshold = 0.0) const;

  friend bool operator==(const PortSpectrum&, const PortSpectrum&) = default;

 private:
  Map entries_;
};

// Weighted sum w1*a + w2*b over the union of supports.
PortSpectrum combine(cplx w1, const PortSpectrum& a, cplx w2, const PortSpectrum& b);

// max over the union of supports of |a(mode) - b(mode)|.
double max_abs_diff(const PortSpectrum& a, const PortSpectrum& b);

struct TwoPortSpectrum {
  PortSpectrum port1;
  PortSpectrum port2;

  const PortSpectrum& port(Port p) const { return p == Port::first ? port1 : port2; }
  double norm2() const { return port1.norm2() + port2.norm2(); }
  TwoPortSpectrum scaled(cplx factor) const { return {port1.scaled(factor), port2.scaled(factor)}; }

  friend bool operator==(const TwoPortSpectrum&, const TwoPortSpectrum&) = default;
};

double max_abs_diff(const TwoPortSpectrum& a, const TwoPortSpectrum& b);

}  // namespace eomq
