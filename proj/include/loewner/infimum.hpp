#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loewner/linalg.hpp"
#include "loewner/matrix_set.hpp"

namespace loewner {

struct InfimumReport {
  bool exists = false;
  std::optional<HermitianMatrix> infimum;
  std::optional<std::size_t> minimizing_index;
};

/// The infimum of a finite set exists iff some member is below all others;
/// it is then that member (lowest index on ties).
InfimumReport finite_infimum(const MatrixSet& set, const Tolerances& tol);

/// Throws NotCommutingFamily (index = first member of the offending pair)
/// unless every pair commutes within eq_rel * (1 + ||A|| ||B||).
void require_commuting(const MatrixSet& set, const Tolerances& tol);

/// M_1 = A_1, M_{k+1} = (M_k + A_{k+1} - |M_k - A_{k+1}|) / 2.
HermitianMatrix commuting_glb_recursive(const MatrixSet& set, const Tolerances& tol);

/// Simultaneous diagonalization by successive refinement of joint
/// eigenspaces, then the entrywise minimum of the diagonals.
HermitianMatrix commuting_glb_diagonal(const MatrixSet& set, const Tolerances& tol);

/// Greatest lower bound among lower bounds commuting with every member, for
/// a commuting family. Both routes are computed; NumericalFailure if they
/// disagree beyond eq_rel * (1 + scale).
HermitianMatrix commuting_glb(const MatrixSet& set, const Tolerances& tol);

/// Greatest commuting lower bound of an arbitrary set, where it can be
/// determined: for commuting families it is commuting_glb; when the only
/// Hermitian matrices commuting with every member are scalars it is
/// (min over members of the smallest eigenvalue) * I. Otherwise `greatest`
/// is empty.
struct CommutingAnalysis {
  bool commuting_family = false;
  Index commutant_dim = 0;  // complex dimension of {X : XA = AX for all A}
  std::optional<HermitianMatrix> greatest;
};

CommutingAnalysis analyze_commuting_bounds(const MatrixSet& set, const Tolerances& tol);

/// Positive maximal lower bound of a PSD family by induction on dimension:
/// shift by the smallest eigenvalue gamma over all members, split off an
/// eigenvector u of a member attaining it, recurse on the Schur complements
/// over span(u), and lift back. Ties go to the lowest member index and the
/// eigensolver's first vector.
HermitianMatrix positive_maximal_lb(const MatrixSet& set, const Tolerances& tol);

/// A maximal lower bound above L: L + positive_maximal_lb(set - L).
/// Throws NotLowerBound unless L is a lower bound.
HermitianMatrix extend_to_maximal(const HermitianMatrix& l, const MatrixSet& set,
                                  const Tolerances& tol);

/// `count` pairwise distinct certified maximal lower bounds, separated by
/// more than 100 * eq_rel * (1 + scale). Throws InfimumExists when the set
/// has an infimum and DistinctnessFailure when retries run out.
std::vector<HermitianMatrix> distinct_maximals(const MatrixSet& set, std::size_t count,
                                               const Tolerances& tol, std::uint64_t seed = 0);

struct PositiveGlbReport {
  Subspace k_subspace;           // range of the parallel sum = intersection of ranges
  HermitianMatrix s_parallel;    // parallel sum of the family
  MatrixSet tilde_set;           // [S]A_j per member
  bool exists = false;
  std::optional<HermitianMatrix> glb;
  std::optional<std::size_t> minimizing_index;
  bool range_in_k = true;                      // range(glb) inside k_subspace
  std::optional<bool> agrees_with_pair_route;  // two-member families only
};

/// Greatest positive lower bound of a PSD family: exists iff the set
/// {[S]A_j} has a minimum member, which is then the answer.
PositiveGlbReport positive_glb_family(const MatrixSet& set, const Tolerances& tol);

}  // namespace loewner
