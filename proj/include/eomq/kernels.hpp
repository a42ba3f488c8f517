#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; both accumulate each output element in the same order,
// so the two paths agree bit for bit.

#include <span>
#include <vector>

#include "eomq/cmatrix.hpp"

namespace eomq {

enum class Exec { serial, parallel };

namespace kernels {

void matmul_serial(const CMatrix& a, const CMatrix& b, CMatrix& out);
void matmul_parallel(const CMatrix& a, const CMatrix& b, CMatrix& out);

CMatrix matmul(const CMatrix& a, const CMatrix& b, Exec exec = Exec::parallel);

// field[i] = 2 Re sum_k phasor[k] * exp(-j omega[k] t[i])
void sample_phasors_serial(std::span<const double> omega, std::span<const cplx> phasor,
                           std::span<const double> times, std::span<double> field);
void sample_phasors_parallel(std::span<const double> omega, std::span<const cplx> phasor,
                             std::span<const double> times, std::span<double> field);

std::vector<double> sample_phasors(std::span<const double> omega, std::span<const cplx> phasor,
                                   std::span<const double> times, Exec exec = Exec::parallel);

int max_threads();

}  // namespace kernels
}  // namespace eomq
