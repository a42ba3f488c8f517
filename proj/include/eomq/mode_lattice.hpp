#pragma once

#include <compare>
#include <cstdint>
#include <numbers>

namespace eomq {

// Positive mode number on the quantized frequency lattice. The physical
// angular frequency is 2*pi*n*nu/L; see mode_omega().
class ModeIndex {
 public:
  explicit ModeIndex(std::int64_t n);

  std::int64_t value() const { return n_; }

  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;

 private:
  std::int64_t n_;
};

// Lattice index of an RF drive tone, Omega = 2*pi*N*nu/L.
class RFTone {
 public:
  explicit RFTone(std::int64_t n);

  std::int64_t value() const { return n_; }

  friend auto operator<=>(const RFTone&, const RFTone&) = default;

 private:
  std::int64_t n_;
};

// n0 = q0*N - r0 with 0 <= r0 < N.
struct SidebandDecomposition {
  std::int64_t q0;
  std::int64_t r0;

  friend bool operator==(const SidebandDecomposition&, const SidebandDecomposition&) = default;
};

SidebandDecomposition decompose_mode(ModeIndex n0, RFTone tone);

// Mode reached by ladder order q: q*N - r0. Throws for q < 1 or r0 outside [0, N).
ModeIndex sideband_mode(std::int64_t q, RFTone tone, std::int64_t r0);

// Default lattice constants make 2*pi*nu/L equal to one, so omega_n = n.
inline constexpr double kDefaultSpeed = 1.0;
inline constexpr double kDefaultLength = 2.0 * std::numbers::pi;

double mode_omega(ModeIndex n, double speed = kDefaultSpeed, double length = kDefaultLength);

}  // namespace eomq
