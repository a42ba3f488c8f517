#include "eomq/splitters.hpp"

#include <cmath>
#include <stdexcept>

#include "eomq/special_functions.hpp"

namespace eomq {

std::string_view to_string(SplitterKind kind) {
  switch (kind) {
    case SplitterKind::bulk:
      return "bulk";
    case SplitterKind::directional_coupler:
      return "dc";
    case SplitterKind::y_branch:
      return "yb";
  }
  return "?";
}

SplitterKind parse_splitter_kind(std::string_view name) {
  if (name == "bulk") return SplitterKind::bulk;
  if (name == "dc") return SplitterKind::directional_coupler;
  if (name == "yb") return SplitterKind::y_branch;
  throw std::invalid_argument("unknown splitter kind '" + std::string(name) + "'");
}

void SplitterSpec::validate() const {
  if (!std::isfinite(value)) throw std::invalid_argument("splitter parameter must be finite");
  if (kind != SplitterKind::bulk && (value < 0.0 || value > 1.0)) {
    throw std::invalid_argument("coupling fraction k must lie in [0, 1], got " +
                                std::to_string(value));
  }
}

double SplitterSpec::mixing_angle() const {
  validate();
  if (kind == SplitterKind::bulk) return value;
  return 2.0 * std::asin(std::sqrt(value));
}

SplitterCoeffs splitter_coeffs(const SplitterSpec& spec) {
  spec.validate();
  SplitterCoeffs c{};
  switch (spec.kind) {
    case SplitterKind::bulk: {
      const double half = 0.5 * spec.value;
      c.t = c.t_prime = std::cos(half);
      c.r = c.r_prime = kJ * std::sin(half);
      break;
    }
    case SplitterKind::directional_coupler:
      c.t = c.t_prime = std::sqrt(1.0 - spec.value);
      c.r = c.r_prime = kJ * std::sqrt(spec.value);
      break;
    case SplitterKind::y_branch:
      c.t = c.t_prime = std::sqrt(1.0 - spec.value);
      c.r_prime = std::sqrt(spec.value);
      c.r = -std::sqrt(spec.value);
      break;
  }
  if (spec.mirrored) {
    c.r = -c.r;
    c.r_prime = -c.r_prime;
  }
  return c;
}

ReciprocityReport verify_reciprocity(const SplitterCoeffs& c, double tolerance) {
  ReciprocityReport rep;
  rep.port1_defect = std::abs(std::norm(c.t_prime) + std::norm(c.r_prime) - 1.0);
  rep.port2_defect = std::abs(std::norm(c.t) + std::norm(c.r) - 1.0);
  rep.cross_defect = std::abs(std::conj(c.r) * c.t_prime + c.r_prime * std::conj(c.t));
  if (rep.port1_defect > tolerance) rep.violations.emplace_back("|t'|^2 + |r'|^2 != 1");
  if (rep.port2_defect > tolerance) rep.violations.emplace_back("|t|^2 + |r|^2 != 1");
  if (rep.cross_defect > tolerance) rep.violations.emplace_back("r* t' + r' t* != 0");
  return rep;
}

CMatrix heisenberg_matrix(const SplitterCoeffs& c) {
  CMatrix m(2, 2);
  m(0, 0) = c.t_prime;
  m(0, 1) = c.r_prime;
  m(1, 0) = c.r;
  m(1, 1) = c.t;
  return m;
}

CMatrix transfer_matrix(const SplitterCoeffs& c) { return heisenberg_matrix(c).transpose(); }

CMatrix splitter_generator_oracle(const SplitterSpec& spec) {
  const double half = 0.5 * spec.mixing_angle();
  // Single-photon generator G with U = exp(jG), U[out][in].
  CMatrix g(2, 2);
  if (spec.kind == SplitterKind::y_branch) {
    // exp[-theta (a1^dag a2 - a2^dag a1) / 2]
    g(0, 1) = kJ * half;
    g(1, 0) = -kJ * half;
  } else {
    // exp[j theta (a1^dag a2 + a2^dag a1) / 2]
    g(0, 1) = half;
    g(1, 0) = half;
  }
  CMatrix u = unitary_exp(HermitianGenerator(std::move(g)), Exec::serial);
  if (spec.mirrored) {
    u(0, 1) = -u(0, 1);
    u(1, 0) = -u(1, 0);
  }
  return u.transpose();
}

std::pair<cplx, cplx> coherent_through_splitter(const SplitterCoeffs& c, cplx alpha, cplx beta) {
  return {c.t_prime * alpha + c.r * beta, c.r_prime * alpha + c.t * beta};
}

cplx two_photon_cross_weight(const SplitterCoeffs& c) { return c.t * c.t_prime + c.r * c.r_prime; }

}  // namespace eomq
