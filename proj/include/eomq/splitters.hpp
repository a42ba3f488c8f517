#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eomq/cmatrix.hpp"

namespace eomq {

enum class SplitterKind { bulk, directional_coupler, y_branch };

std::string_view to_string(SplitterKind kind);
SplitterKind parse_splitter_kind(std::string_view name);

// One lossless two-port splitter. `value` is the mixing angle theta_split for
// bulk splitters and the power coupling fraction k for guided-wave ones.
// A mirrored splitter has both cross-coupling coefficients negated, which is
// how a Y-branch sits when it is used as the output combiner of an MZI.
struct SplitterSpec {
  SplitterKind kind = SplitterKind::directional_coupler;
  double value = 0.5;
  bool mirrored = false;

  static SplitterSpec bulk(double theta_split) { return {SplitterKind::bulk, theta_split, false}; }
  static SplitterSpec directional_coupler(double k) {
    return {SplitterKind::directional_coupler, k, false};
  }
  static SplitterSpec y_branch(double k) { return {SplitterKind::y_branch, k, false}; }
  SplitterSpec with_mirror(bool m = true) const { return {kind, value, m}; }

  // Throws std::invalid_argument for k outside [0, 1] or non-finite values.
  void validate() const;
  // Mixing angle theta_split; for guided-wave kinds 2*asin(sqrt(k)).
  double mixing_angle() const;

  friend bool operator==(const SplitterSpec&, const SplitterSpec&) = default;
};

// Field coefficients. A photon entering port 1 leaves with amplitude t' in
// output 1 and r' in output 2; entering port 2 it leaves with r in output 1
// and t in output 2.
struct SplitterCoeffs {
  cplx t;
  cplx t_prime;
  cplx r;
  cplx r_prime;
};

SplitterCoeffs splitter_coeffs(const SplitterSpec& spec);

struct ReciprocityReport {
  double port1_defect = 0.0;  // ||t'|^2 + |r'|^2 - 1|
  double port2_defect = 0.0;  // ||t|^2 + |r|^2 - 1|
  double cross_defect = 0.0;  // |r* t' + r' t*|
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

ReciprocityReport verify_reciprocity(const SplitterCoeffs& c, double tolerance = 1e-14);

// Creation-operator transform [[t', r'], [r, t]] acting on (a1^dag, a2^dag).
CMatrix heisenberg_matrix(const SplitterCoeffs& c);
// Single-photon amplitude map, column = input port: [[t', r], [r', t]].
CMatrix transfer_matrix(const SplitterCoeffs& c);

/// Builds the single-photon generator of the splitter's scattering operator
/// (the J1 form for bulk and directional couplers, the -J2 form for Y-branches),
/// exponentiates it and returns the result in heisenberg_matrix() layout.
/// Mirroring is applied as a conjugation by diag(1, -1).
CMatrix splitter_generator_oracle(const SplitterSpec& spec);

// Output displacements (t' alpha + r beta, r' alpha + t beta) for coherent
// inputs alpha (port 1) and beta (port 2).
std::pair<cplx, cplx> coherent_through_splitter(const SplitterCoeffs& c, cplx alpha, cplx beta);

// t t' + r r'; vanishes for balanced splitters.
cplx two_photon_cross_weight(const SplitterCoeffs& c);

}  // namespace eomq
