#include "eomq/mean_field.hpp"

#include <cmath>
#include <stdexcept>

namespace eomq {

MeanFieldSeries mean_field(const TwoPortSpectrum& displacements, Port port, std::span<const double> times,
                           const FieldUnits& units, Exec exec) {
  if (!(units.field_scale >= 0.0)) throw std::invalid_argument("field scale must be >= 0");
  MeanFieldSeries out;
  out.times.assign(times.begin(), times.end());

  std::vector<double> omega;
  std::vector<cplx> phasor;
  for (const auto& [mode, amp] : displacements.port(port)) {
    const double w = mode_omega(ModeIndex(mode), units.speed, units.length);
    const double xi = units.field_scale * std::sqrt(w);
    const cplx p = kJ * xi * amp;
    out.terms.push_back({mode, w, p});
    omega.push_back(w);
    phasor.push_back(p);
  }
  out.field = kernels::sample_phasors(omega, phasor, times, exec);
  return out;
}

std::vector<double> time_grid(double start, double stop, int samples) {
  if (samples < 1) throw std::invalid_argument("time grid needs at least one sample");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw std::invalid_argument("time grid bounds must be finite");
  std::vector<double> t(static_cast<std::size_t>(samples));
  if (samples == 1) {
    t[0] = start;
    return t;
  }
  const double step = (stop - start) / (samples - 1);
  for (int i = 0; i < samples; ++i) t[static_cast<std::size_t>(i)] = start + step * i;
  t.back() = stop;
  return t;
}

}  // namespace eomq
