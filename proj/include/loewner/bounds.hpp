#pragma once

#include <optional>
#include <vector>

#include "loewner/linalg.hpp"
#include "loewner/matrix_set.hpp"

namespace loewner {

/// L <= A for every member A.
bool is_lower_bound(const HermitianMatrix& l, const MatrixSet& set, const Tolerances& tol);

/// Finite-dimensional maximality certificate for a lower bound M.
///
/// M is maximal exactly when the null spaces N(A - M) jointly span C^n, or
/// equivalently when the ranges of A - M intersect in {0}. Both forms are
/// evaluated; `criteria_agree` records whether they gave the same answer.
struct MaximalityCertificate {
  std::vector<Index> per_member_nullspace_dims;
  Index span_dim = 0;
  Index ambient_dim = 0;
  bool is_lower_bound = false;
  bool ranges_intersect_trivially = false;
  bool criteria_agree = true;
  bool is_maximal = false;
};

MaximalityCertificate certify_maximal(const HermitianMatrix& m, const MatrixSet& set,
                                      const Tolerances& tol);

/// True when M carries a spanning certificate, which makes it an extreme
/// point of the set of lower bounds. False for non-maximal M. A maximal M
/// without the spanning property would be undecided; in finite dimension
/// that case does not arise.
bool is_extreme_certified(const HermitianMatrix& m, const MatrixSet& set, const Tolerances& tol);

/// M_T = (A + B - T^H |T^{-H} (A - B) T^{-1}| T) / 2, a maximal lower bound
/// of {A, B} for every invertible T. T = I gives (A + B - |A - B|) / 2.
HermitianMatrix mlb_mt(const HermitianMatrix& a, const HermitianMatrix& b, const Matrix& t,
                       const Tolerances& tol);

/// Result of probing the lower bounds that touch the set's minimum at a
/// prescribed unit vector u.
struct ConstrainedResult {
  double alpha = 0.0;                        // min over members of (Au, u)
  std::vector<std::size_t> attaining;        // members with (Au, u) = alpha
  bool attaining_members_agree = false;      // Au = Bu for all attaining A, B
  bool bounds_at_u_empty = true;             // no lower bound L with (Lu, u) = alpha
  std::optional<MatrixSet> reduced_set;      // on u-perp; absent when n = 1 or empty
  Matrix witness_coupling;                   // row block B12 of an attaining member
  Matrix rotation;                           // [u | u-perp basis]
};

/// Throws NotUnitVector unless ||u|| = 1 within eq_rel.
ConstrainedResult constrained_at_vector(const MatrixSet& set, const Vector& u,
                                        const Tolerances& tol);

/// A maximal lower bound M with (Mu, u) = alpha, assembled from the block
/// form [[alpha, B12], [B12^H, M2]] with M2 maximal for the reduced set.
/// Empty when no lower bound attains alpha at u.
std::optional<HermitianMatrix> maximal_in_lu(const MatrixSet& set, const Vector& u,
                                             const Tolerances& tol);

}  // namespace loewner
