#pragma once

#include <optional>

#include "loewner/linalg.hpp"
#include "loewner/matrix_set.hpp"

namespace loewner {

/// Parallel sum A : B = A (A + B)^# B of two PSD matrices, symmetrized.
/// Its range is range(A) n range(B).
HermitianMatrix parallel_sum(const HermitianMatrix& a, const HermitianMatrix& b,
                             const Tolerances& tol);

/// Left fold of the two-term parallel sum over the family.
HermitianMatrix parallel_sum(const MatrixSet& family, const Tolerances& tol);

/// Ando's limit [A]B = lim (mA) : B, evaluated in closed form as
/// B^{1/2} P_V B^{1/2} with V the null space of (I - P_range(A)) B^{1/2}.
/// `scale` anchors the rank decision on A when A was itself computed (a
/// parallel sum whose true range may be {0}); zero means ||A||.
HermitianMatrix ando_limit(const HermitianMatrix& a, const HermitianMatrix& b,
                           const Tolerances& tol, double scale = 0.0);

struct TwoOpGlbResult {
  bool exists;
  std::optional<HermitianMatrix> glb;
  HermitianMatrix ando_ab;  // [A]B
  HermitianMatrix ando_ba;  // [B]A
  Order comparability;      // of [A]B against [B]A
};

/// Greatest positive lower bound of {A, B}: exists iff [A]B and [B]A are
/// comparable, and is then the smaller of the two.
TwoOpGlbResult two_op_positive_glb(const HermitianMatrix& a, const HermitianMatrix& b,
                                   const Tolerances& tol);

/// Throws NotPositiveSemidefinite naming `what` unless s >= 0 within psd_rel.
void require_psd(const HermitianMatrix& s, const Tolerances& tol, const char* what,
                 std::optional<std::size_t> index = std::nullopt);

}  // namespace loewner
