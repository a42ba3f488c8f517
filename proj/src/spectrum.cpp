#include "eomq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eomq {

Port port_from_number(int n) {
  if (n == 1) return Port::first;
  if (n == 2) return Port::second;
  throw std::invalid_argument("port must be 1 or 2, got " + std::to_string(n));
}

void PortSpectrum::add(ModeIndex mode, cplx amp) { entries_[mode.value()] += amp; }

void PortSpectrum::set(ModeIndex mode, cplx amp) { entries_[mode.value()] = amp; }

cplx PortSpectrum::at(std::int64_t mode) const {
  const auto it = entries_.find(mode);
  return it == entries_.end() ? cplx{} : it->second;
}

double PortSpectrum::norm2() const {
  double sum = 0.0;
  for (const auto& [mode, amp] : entries_) sum += std::norm(amp);
  return sum;
}

PortSpectrum PortSpectrum::scaled(cplx factor) const {
  PortSpectrum out;
  for (const auto& [mode, amp] : entries_) out.entries_.emplace(mode, factor * amp);
  return out;
}

PortSpectrum PortSpectrum::pruned(double threshold) const {
  PortSpectrum out;
  for (const auto& [mode, amp] : entries_) {
    if (std::abs(amp) > threshold) out.entries_.emplace(mode, amp);
  }
  return out;
}

PortSpectrum combine(cplx w1, const PortSpectrum& a, cplx w2, const PortSpectrum& b) {
  PortSpectrum out;
  for (const auto& [mode, amp] : a) out.add(ModeIndex(mode), w1 * amp);
  for (const auto& [mode, amp] : b) out.add(ModeIndex(mode), w2 * amp);
  return out;
}

double max_abs_diff(const PortSpectrum& a, const PortSpectrum& b) {
  double best = 0.0;
  for (const auto& [mode, amp] : a) best = std::max(best, std::abs(amp - b.at(mode)));
  for (const auto& [mode, amp] : b) best = std::max(best, std::abs(amp - a.at(mode)));
  return best;
}

double max_abs_diff(const TwoPortSpectrum& a, const TwoPortSpectrum& b) {
  return std::max(max_abs_diff(a.port1, b.port1), max_abs_diff(a.port2, b.port2));
}

}  // namespace eomq
