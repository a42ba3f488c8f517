#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eomq/kernels.hpp"
#include "eomq/mode_lattice.hpp"
#include "eomq/spectrum.hpp"

namespace eomq {

// Lattice and field constants. field_scale stands for sqrt(hbar / 2 eps0 V),
// so xi(omega) = field_scale * sqrt(omega).
struct FieldUnits {
  double speed = kDefaultSpeed;
  double length = kDefaultLength;
  double field_scale = 1.0;
};

struct FieldPhasor {
  std::int64_t mode;
  double omega;
  cplx phasor;  // j xi(omega) * displacement
};

// field[i] = 2 Re sum_k terms[k].phasor * exp(-j omega_k times[i])
struct MeanFieldSeries {
  std::vector<double> times;
  std::vector<double> field;
  std::vector<FieldPhasor> terms;
};

MeanFieldSeries mean_field(const TwoPortSpectrum& displacements, Port port, std::span<const double> times,
                           const FieldUnits& units = {}, Exec exec = Exec::parallel);

// Evenly spaced samples including both end points.
std::vector<double> time_grid(double start, double stop, int samples);

}  // namespace eomq
