#pragma once

#include <optional>

#include "loewner/linalg.hpp"

namespace loewner {

/// Parameter of a maximal lower bound of {J, 0}, J = diag(I_p, -I_q):
/// an arbitrary p x q complex matrix X.
struct StottParam {
  Index p = 0;
  Index q = 0;
  Matrix x;  // p x q
};

/// J = diag(I_p, -I_q).
HermitianMatrix signature_matrix(Index p, Index q);

struct StottPair {
  HermitianMatrix sx;  // [[I + XX^H, (I + XX^H)^{1/2} X], [X^H (I + XX^H)^{1/2}, X^H X]]
  HermitianMatrix mx;  // J - sx, a maximal lower bound of {J, 0}
};

/// Throws ValidationError unless p, q >= 1 and X is p x q.
StottPair stott_mx(const StottParam& param, const Tolerances& tol);

/// Inverse map. Throws NotMaximalForJZero unless M is a maximal lower bound
/// of {J, 0}, and AngularExtractionFailed when N(M) is not the graph of a
/// strict contraction from C^p to C^q or the round trip does not reproduce M.
StottParam stott_recover_x(const HermitianMatrix& m, Index p, Index q, const Tolerances& tol);

/// Inertia-based congruence normal form of a pair {A, B}.
///
/// With D = A - B of inertia (p, zeros, q): when D is invertible, T satisfies
/// T^{-H} D T^{-1} = J, so {A, B} = B + T^H {J, 0} T.
struct PairNormalization {
  Index p = 0;
  Index zeros = 0;
  Index q = 0;
  std::optional<Matrix> t;  // present iff zeros == 0
};

PairNormalization normalize_pair(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const Tolerances& tol);

/// Maximal lower bound of {A, B} with parameter X, transported from {J, 0}:
/// B + T^H M(X) T. Requires A - B invertible with p, q >= 1 and X of shape p x q.
HermitianMatrix stott_pair_bound(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const Matrix& x, const Tolerances& tol);

}  // namespace loewner
