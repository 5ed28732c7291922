#pragma once

#include <doctest.h>

#include "loewner/linalg.hpp"

namespace loewner::test {

inline Tolerances defaults() { return Tolerances{}; }

inline double dist(const Matrix& a, const Matrix& b) { return op_norm(a - b); }
inline double dist(const HermitianMatrix& a, const HermitianMatrix& b) {
  return op_norm(a.matrix() - b.matrix());
}

/// Columns of `v`, wrapped as a subspace after orthonormalization.
inline Subspace span_of(const Matrix& v) { return Subspace::span(v, defaults()); }

inline Vector basis_vector(Index n, Index k) {
  Vector e = Vector::Zero(n);
  e(k) = 1.0;
  return e;
}

/// Independent PSD check via a Cholesky of S + eps I, bypassing the
/// eigensolver used inside the library.
inline bool cholesky_psd(const HermitianMatrix& s, double eps) {
  const Index n = s.dim();
  Eigen::LLT<Matrix> llt(s.matrix() + eps * Matrix::Identity(n, n));
  return llt.info() == Eigen::Success;
}

}  // namespace loewner::test
