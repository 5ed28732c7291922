#pragma once

#include <optional>
#include <string_view>

#include "loewner/linalg.hpp"
#include "loewner/matrix_set.hpp"

namespace loewner {

/// A Hermitian matrix cut into 2x2 blocks along C^n = h1 (+) h2.
///
/// Blocks are expressed in the coordinates of the concatenated basis
/// [h1 | h2], kept in `rotation` so the original can be rebuilt exactly.
struct BlockPartition {
  Subspace h1;
  Subspace h2;
  Matrix rotation;  // unitary, columns = h1 basis then h2 basis
  HermitianMatrix s1;
  Matrix s12;       // dim h1 x dim h2
  HermitianMatrix s2;

  HermitianMatrix reassemble() const;
};

/// Requires 0 < dim h1 < ambient dimension.
BlockPartition partition_blocks(const HermitianMatrix& s, const Subspace& h1,
                                const Tolerances& tol);

enum class AlbertCondition {
  none,             // all three hold
  positivity,       // (i)   s1 >= 0
  range_inclusion,  // (ii)  range(s12) inside range(s1)
  complement,       // (iii) Schur complement >= 0
};

std::string_view to_string(AlbertCondition c);

struct AlbertVerdict {
  bool psd;
  AlbertCondition failing;
  double range_residual;                     // ||(I - P_range(s1)) s12||
  std::optional<HermitianMatrix> complement; // present once (i) and (ii) pass
};

/// Three-condition block test for positive semidefiniteness.
AlbertVerdict albert_is_psd(const HermitianMatrix& s, const Subspace& h1, const Tolerances& tol);

struct SchurComplement {
  HermitianMatrix complement;  // on h2, in h2-basis coordinates
  HermitianMatrix shorted;     // [[0, 0], [0, complement]] rotated back to C^n
  BlockPartition blocks;
};

/// s2 - s12^H s1^# s12, after checking range(s12) inside range(s1).
/// Throws RangeConditionViolated when the inclusion fails.
SchurComplement schur_complement(const HermitianMatrix& s, const Subspace& h1,
                                 const Tolerances& tol);

/// Element-wise Schur complement over h1; order preserved. A failing member
/// is reported through Error::index().
MatrixSet quotient_set(const MatrixSet& set, const Subspace& h1, const Tolerances& tol);

}  // namespace loewner
