#include "loewner/stott.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loewner/bounds.hpp"
#include "loewner/matrix_set.hpp"

namespace loewner {

HermitianMatrix signature_matrix(Index p, Index q) {
  RealVector d(p + q);
  d.head(p).setOnes();
  d.tail(q).setConstant(-1.0);
  return HermitianMatrix::diagonal(d);
}

StottPair stott_mx(const StottParam& param, const Tolerances& tol) {
  const Index p = param.p;
  const Index q = param.q;
  if (p < 1 || q < 1) throw Error(ErrorCode::ValidationError, "p and q must both be >= 1");
  if (param.x.rows() != p || param.x.cols() != q) {
    throw Error(ErrorCode::ValidationError,
                "X must be " + std::to_string(p) + "x" + std::to_string(q));
  }
  const Matrix& x = param.x;
  const HermitianMatrix g =
      HermitianMatrix::symmetrize(Matrix::Identity(p, p) + x * x.adjoint());
  const Matrix root_x = sqrt_psd(g, tol).matrix() * x;

  Matrix s(p + q, p + q);
  s.topLeftCorner(p, p) = g.matrix();
  s.topRightCorner(p, q) = root_x;
  s.bottomLeftCorner(q, p) = root_x.adjoint();
  s.bottomRightCorner(q, q) = x.adjoint() * x;
  HermitianMatrix sx = HermitianMatrix::symmetrize(s);
  HermitianMatrix mx = signature_matrix(p, q) - sx;
  return {std::move(sx), std::move(mx)};
}

StottParam stott_recover_x(const HermitianMatrix& m, Index p, Index q, const Tolerances& tol) {
  if (p < 1 || q < 1) throw Error(ErrorCode::ValidationError, "p and q must both be >= 1");
  if (m.dim() != p + q) {
    throw Error(ErrorCode::DimensionMismatch,
                "M has dimension " + std::to_string(m.dim()) + ", expected p + q");
  }
  const HermitianMatrix j = signature_matrix(p, q);
  const MatrixSet pair({j, HermitianMatrix::zero(p + q)});
  if (!certify_maximal(m, pair, tol).is_maximal) {
    throw Error(ErrorCode::NotMaximalForJZero, "M is not a maximal lower bound of {J, 0}");
  }

  const Subspace kernel = range_nullspace(m, tol, std::max(1.0, m.norm())).nullspace;
  if (kernel.dim() != p) {
    throw Error(ErrorCode::AngularExtractionFailed,
                "N(M) has dimension " + std::to_string(kernel.dim()) + ", expected " +
                    std::to_string(p));
  }
  const Matrix z1 = kernel.basis().topRows(p);
  const Matrix z2 = kernel.basis().bottomRows(q);
  Eigen::JacobiSVD<Matrix> svd(z1);
  if (svd.singularValues()(p - 1) <= tol.rank_rel) {
    throw Error(ErrorCode::AngularExtractionFailed, "N(M) is not a graph over C^p");
  }
  // N(M) = {(y, K y)} with K a strict contraction
  const Matrix k = z2 * z1.fullPivLu().inverse();
  const HermitianMatrix defect =
      HermitianMatrix::symmetrize(Matrix::Identity(p, p) - k.adjoint() * k);
  const EigDecomposition e = spectral(defect);
  if (e.eigenvalues(0) <= tol.rank_rel) {
    throw Error(ErrorCode::AngularExtractionFailed, "graph operator is not a strict contraction");
  }
  const RealVector inv_root = e.eigenvalues.cwiseSqrt().cwiseInverse();
  const Matrix defect_inv_root =
      e.eigenvectors * inv_root.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();

  StottParam out{p, q, -defect_inv_root * k.adjoint()};
  const HermitianMatrix back = stott_mx(out, tol).mx;
  if ((back - m).norm() > tol.eq_rel * (1.0 + m.norm())) {
    throw Error(ErrorCode::AngularExtractionFailed, "recovered parameter does not reproduce M");
  }
  return out;
}

PairNormalization normalize_pair(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const Tolerances& tol) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "pair of unequal dims");
  const EigDecomposition e = spectral(a - b);
  const Index n = a.dim();
  double top = std::max(a.norm(), b.norm());
  for (Index i = 0; i < n; ++i) top = std::max(top, std::abs(e.eigenvalues(i)));
  const double cut = tol.rank_rel * top;

  PairNormalization out;
  std::vector<Index> positive;
  std::vector<Index> negative;
  for (Index i = 0; i < n; ++i) {
    const double v = e.eigenvalues(i);
    if (v > cut) {
      positive.push_back(i);
    } else if (v < -cut) {
      negative.push_back(i);
    } else {
      ++out.zeros;
    }
  }
  out.p = static_cast<Index>(positive.size());
  out.q = static_cast<Index>(negative.size());
  if (out.zeros != 0) return out;

  // rows of T: sqrt|lambda| u^H, positive eigenvalues first
  Matrix t(n, n);
  Index row = 0;
  for (const auto* group : {&positive, &negative}) {
    for (Index i : *group) {
      t.row(row++) = std::sqrt(std::abs(e.eigenvalues(i))) * e.eigenvectors.col(i).adjoint();
    }
  }
  out.t = std::move(t);
  return out;
}

HermitianMatrix stott_pair_bound(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const Matrix& x, const Tolerances& tol) {
  const PairNormalization pn = normalize_pair(a, b, tol);
  if (!pn.t) throw Error(ErrorCode::ValidationError, "A - B is singular");
  if (pn.p < 1 || pn.q < 1) {
    throw Error(ErrorCode::ValidationError, "A - B is definite; the pair is comparable");
  }
  const StottPair s = stott_mx(StottParam{pn.p, pn.q, x}, tol);
  return b + s.mx.congruence(*pn.t);
}

}  // namespace loewner
