#pragma once

namespace loewner {

/// Relative thresholds for the three kinds of numerical decisions.
///
/// `rank_rel` decides which eigenvalues / singular values count as zero,
/// relative to the largest one (or to a caller-supplied scale).
/// `psd_rel` decides order questions: S <= T when the smallest eigenvalue
/// of T - S is at least -psd_rel * (1 + ||T - S||).
/// `eq_rel` decides equality of matrices and vectors.
struct Tolerances {
  double rank_rel = 1e-10;
  double psd_rel = 1e-9;
  double eq_rel = 1e-8;

  /// Throws Error(InvalidTolerance) unless all fields are finite and >= 0.
  void validate() const;
};

}  // namespace loewner
