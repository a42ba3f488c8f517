#include "eomq/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace eomq::kernels {

namespace {

void check_matmul_shapes(const CMatrix& a, const CMatrix& b, CMatrix& out) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
  if (out.rows() != a.rows() || out.cols() != b.cols()) out = CMatrix(a.rows(), b.cols());
}

// One output row, i-k-j order on split real/imag parts. std::complex
// multiplication would go through the NaN-recovery path.
inline void matmul_row(const CMatrix& a, const CMatrix& b, CMatrix& out, std::size_t i) {
  const std::size_t n = b.cols();
  double* c = reinterpret_cast<double*>(out.row(i).data());
  for (std::size_t j = 0; j < 2 * n; ++j) c[j] = 0.0;
  const auto arow = a.row(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const double ar = arow[k].real();
    const double ai = arow[k].imag();
    if (ar == 0.0 && ai == 0.0) continue;
    const double* brow = reinterpret_cast<const double*>(b.row(k).data());
    for (std::size_t j = 0; j < n; ++j) {
      const double br = brow[2 * j];
      const double bi = brow[2 * j + 1];
      c[2 * j] += ar * br - ai * bi;
      c[2 * j + 1] += ar * bi + ai * br;
    }
  }
}

inline double sample_one(std::span<const double> omega, std::span<const cplx> phasor, double t) {
  double acc = 0.0;
  for (std::size_t k = 0; k < omega.size(); ++k) {
    const double ph = omega[k] * t;
    // Re[P e^{-j ph}] = Re P cos ph + Im P sin ph
    acc += phasor[k].real() * std::cos(ph) + phasor[k].imag() * std::sin(ph);
  }
  return 2.0 * acc;
}

void check_sample_shapes(std::span<const double> omega, std::span<const cplx> phasor,
                         std::span<const double> times, std::span<double> field) {
  if (omega.size() != phasor.size() || times.size() != field.size()) {
    throw std::invalid_argument("sample_phasors: length mismatch");
  }
}

}  // namespace

void matmul_serial(const CMatrix& a, const CMatrix& b, CMatrix& out) {
  check_matmul_shapes(a, b, out);
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, out, i);
}

void matmul_parallel(const CMatrix& a, const CMatrix& b, CMatrix& out) {
  check_matmul_shapes(a, b, out);
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) matmul_row(a, b, out, static_cast<std::size_t>(i));
}

CMatrix matmul(const CMatrix& a, const CMatrix& b, Exec exec) {
  CMatrix out(a.rows(), b.cols());
  if (exec == Exec::serial)
    matmul_serial(a, b, out);
  else
    matmul_parallel(a, b, out);
  return out;
}

void sample_phasors_serial(std::span<const double> omega, std::span<const cplx> phasor,
                           std::span<const double> times, std::span<double> field) {
  check_sample_shapes(omega, phasor, times, field);
  for (std::size_t i = 0; i < times.size(); ++i) field[i] = sample_one(omega, phasor, times[i]);
}

void sample_phasors_parallel(std::span<const double> omega, std::span<const cplx> phasor,
                             std::span<const double> times, std::span<double> field) {
  check_sample_shapes(omega, phasor, times, field);
  const auto n = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    field[k] = sample_one(omega, phasor, times[k]);
  }
}

std::vector<double> sample_phasors(std::span<const double> omega, std::span<const cplx> phasor,
                                   std::span<const double> times, Exec exec) {
  std::vector<double> field(times.size());
  if (exec == Exec::serial)
    sample_phasors_serial(omega, phasor, times, field);
  else
    sample_phasors_parallel(omega, phasor, times, field);
  return field;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace eomq::kernels
