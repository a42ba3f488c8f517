#include "eomq/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eomq {

namespace {

constexpr double kRescaleAbove = 1e200;
constexpr double kRescaleBy = 1e-200;
// Below this the recurrence ratio 2k/x can overflow between rescales;
// the leading power term is exact to double precision there.
constexpr double kTinyArgument = 1e-100;

double leading_term(int n, double x) {
  double v = 1.0;
  for (int k = 1; k <= n; ++k) v *= (0.5 * x) / k;
  return v;
}

}  // namespace

double bessel_j(int order, double x) {
  if (!std::isfinite(x) || std::abs(x) > kBesselMaxArgument) {
    throw std::out_of_range("bessel_j: argument outside [-50, 50]: " + std::to_string(x));
  }
  double sign = 1.0;
  int n = order;
  if (n < 0) {
    n = -n;
    if (n % 2 != 0) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (n % 2 != 0) sign = -sign;
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (x < kTinyArgument) return sign * leading_term(n, x);

  const double top = std::max(static_cast<double>(n), x);
  int start = static_cast<int>(top + 30.0 + std::sqrt(60.0 * top));
  start += start % 2;

  double upper = 0.0;   // J_{k+1}
  double current = 1.0; // J_k, arbitrary scale
  double even_sum = 0.0;
  double result = 0.0;
  for (int k = start; k > 0; --k) {
    const double lower = (2.0 * k / x) * current - upper;
    upper = current;
    current = lower;
    const int idx = k - 1;
    if (idx == n) result = current;
    if (idx > 0 && idx % 2 == 0) even_sum += current;
    if (std::abs(current) > kRescaleAbove) {
      current *= kRescaleBy;
      upper *= kRescaleBy;
      even_sum *= kRescaleBy;
      result *= kRescaleBy;
    }
  }
  const double norm = current + 2.0 * even_sum;
  return sign * result / norm;
}

double bessel_j_series(int order, double x, int terms) {
  if (order < 0) throw std::invalid_argument("bessel_j_series: order must be >= 0");
  if (terms < 20) throw std::invalid_argument("bessel_j_series: need at least 20 terms");
  const double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= order; ++k) term *= half / k;
  double sum = term;
  const double step = -half * half;
  for (int k = 0; k + 1 < terms; ++k) {
    term *= step / ((k + 1.0) * (order + k + 1.0));
    sum += term;
  }
  return sum;
}

HermitianGenerator::HermitianGenerator(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0) throw std::invalid_argument("generator dimension must be positive");
  if (!entries_.square()) throw std::invalid_argument("generator must be square");
  const std::size_t n = entries_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > kTolerance) {
        throw std::invalid_argument("generator is not Hermitian at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
    }
  }
}

CMatrix unitary_exp(const HermitianGenerator& generator, Exec exec) {
  const CMatrix& g = generator.entries();
  const std::size_t n = g.rows();

  int squarings = 0;
  double norm = g.inf_norm();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const CMatrix a = cplx(0.0, std::ldexp(1.0, -squarings)) * g;

  CMatrix result = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  constexpr int kMaxTerms = 40;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = kernels::matmul(term, a, exec);
    term *= 1.0 / k;
    result += term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = kernels::matmul(result, result, exec);
  return result;
}

double unitarity_defect(const CMatrix& u, Exec exec) {
  const CMatrix prod = kernels::matmul(u.adjoint(), u, exec);
  return max_abs_diff(prod, CMatrix::identity(u.rows()));
}

}  // namespace eomq
