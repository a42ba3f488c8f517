#pragma once

#include "eomq/cmatrix.hpp"
#include "eomq/kernels.hpp"

namespace eomq {

inline constexpr double kBesselMaxArgument = 50.0;

/// Bessel function of the first kind J_s(x) for integer order.
///
/// Evaluated by Miller's backward recurrence normalized with
/// J_0 + 2 sum_k J_2k = 1. Negative orders and arguments are folded with
/// J_{-s}(x) = (-1)^s J_s(x) = J_s(-x). Absolute error is below 1e-12 for
/// |x| <= kBesselMaxArgument; larger arguments throw std::out_of_range.
double bessel_j(int order, double x);

/// Truncated ascending series sum_{k<terms} (-1)^k (x/2)^{s+2k} / (k! (s+k)!).
/// Independent cross-check for bessel_j; only trustworthy for moderate |x|
/// where the alternating series does not cancel catastrophically.
/// Requires order >= 0 and terms >= 20.
double bessel_j_series(int order, double x, int terms);

// Square complex matrix checked to be Hermitian to within 1e-14.
class HermitianGenerator {
 public:
  static constexpr double kTolerance = 1e-14;

  explicit HermitianGenerator(CMatrix entries);

  std::size_t dimension() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }

 private:
  CMatrix entries_;
};

/// U = exp(j G) by scaling and squaring with a Taylor kernel. The generator
/// is scaled by 2^-s until its infinity norm is at most 0.5, the series is
/// summed until the next term drops below 1e-18 in max norm, and the result
/// is squared s times.
CMatrix unitary_exp(const HermitianGenerator& generator, Exec exec = Exec::parallel);

// max_ij |(U^dagger U - I)_ij|
double unitarity_defect(const CMatrix& u, Exec exec = Exec::parallel);

}  // namespace eomq
