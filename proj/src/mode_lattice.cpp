#include "eomq/mode_lattice.hpp"

#include <stdexcept>
#include <string>

namespace eomq {

ModeIndex::ModeIndex(std::int64_t n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("mode index must be >= 1, got " + std::to_string(n));
  }
}

RFTone::RFTone(std::int64_t n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("RF tone index must be >= 1, got " + std::to_string(n));
  }
}

SidebandDecomposition decompose_mode(ModeIndex n0, RFTone tone) {
  const std::int64_t n = n0.value();
  const std::int64_t big_n = tone.value();
  const std::int64_t q0 = (n + big_n - 1) / big_n;
  return {q0, q0 * big_n - n};
}

ModeIndex sideband_mode(std::int64_t q, RFTone tone, std::int64_t r0) {
  if (q < 1) {
    throw std::invalid_argument("ladder order must be >= 1, got " + std::to_string(q));
  }
  if (r0 < 0 || r0 >= tone.value()) {
    throw std::invalid_argument("lattice offset r0 must lie in [0, N), got " + std::to_string(r0));
  }
  return ModeIndex(q * tone.value() - r0);
}

double mode_omega(ModeIndex n, double speed, double length) {
  if (!(speed > 0.0) || !(length > 0.0)) {
    throw std::invalid_argument("mode_omega needs speed > 0 and length > 0");
  }
  return 2.0 * std::numbers::pi * static_cast<double>(n.value()) * speed / length;
}

}  // namespace eomq
