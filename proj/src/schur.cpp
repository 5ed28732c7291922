#include "loewner/schur.hpp"

#include <string>

namespace loewner {

namespace {

struct RangeCheck {
  HermitianMatrix s1_pinv;
  double residual;
  bool holds;
};

// The rank decision on s1 is anchored to the norm of the whole matrix, so a
// numerically zero corner is recognised as zero even when it is 1x1.
RangeCheck check_range(const BlockPartition& b, double whole_norm, const Tolerances& tol) {
  const double scale = std::max(whole_norm, b.s1.norm());
  HermitianMatrix s1_pinv = pinv(b.s1, tol, scale);
  const Index k = b.s1.dim();
  const Matrix proj = b.s1.matrix() * s1_pinv.matrix();
  const double residual = op_norm((Matrix::Identity(k, k) - proj) * b.s12);
  const bool holds = residual <= tol.eq_rel * (1.0 + op_norm(b.s12));
  return {std::move(s1_pinv), residual, holds};
}

HermitianMatrix complement_from(const BlockPartition& b, const HermitianMatrix& s1_pinv) {
  return HermitianMatrix::symmetrize(b.s2.matrix() -
                                     b.s12.adjoint() * s1_pinv.matrix() * b.s12);
}

}  // namespace

HermitianMatrix BlockPartition::reassemble() const {
  const Index k = s1.dim();
  const Index m = s2.dim();
  Matrix blocks(k + m, k + m);
  blocks.topLeftCorner(k, k) = s1.matrix();
  blocks.topRightCorner(k, m) = s12;
  blocks.bottomLeftCorner(m, k) = s12.adjoint();
  blocks.bottomRightCorner(m, m) = s2.matrix();
  return HermitianMatrix::symmetrize(rotation * blocks * rotation.adjoint());
}

BlockPartition partition_blocks(const HermitianMatrix& s, const Subspace& h1,
                                const Tolerances& tol) {
  (void)tol;
  if (h1.ambient_dim() != s.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspace and matrix live in different spaces");
  }
  if (h1.dim() == 0 || h1.dim() == s.dim()) {
    throw Error(ErrorCode::TrivialSubspace, "block split needs a proper nontrivial subspace");
  }
  Subspace h2 = h1.complement();
  const Index n = s.dim();
  const Index k = h1.dim();
  Matrix rot(n, n);
  rot << h1.basis(), h2.basis();
  const Matrix local = rot.adjoint() * s.matrix() * rot;
  return BlockPartition{h1,
                        std::move(h2),
                        std::move(rot),
                        HermitianMatrix::symmetrize(local.topLeftCorner(k, k)),
                        local.topRightCorner(k, n - k),
                        HermitianMatrix::symmetrize(local.bottomRightCorner(n - k, n - k))};
}

std::string_view to_string(AlbertCondition c) {
  switch (c) {
    case AlbertCondition::none: return "none";
    case AlbertCondition::positivity: return "(i)";
    case AlbertCondition::range_inclusion: return "(ii)";
    case AlbertCondition::complement: return "(iii)";
  }
  return "?";
}

AlbertVerdict albert_is_psd(const HermitianMatrix& s, const Subspace& h1, const Tolerances& tol) {
  const BlockPartition b = partition_blocks(s, h1, tol);
  if (!is_psd(b.s1, tol)) {
    return {false, AlbertCondition::positivity, 0.0, std::nullopt};
  }
  RangeCheck rc = check_range(b, s.norm(), tol);
  if (!rc.holds) {
    return {false, AlbertCondition::range_inclusion, rc.residual, std::nullopt};
  }
  HermitianMatrix c = complement_from(b, rc.s1_pinv);
  const bool ok = is_psd(c, tol);
  return {ok, ok ? AlbertCondition::none : AlbertCondition::complement, rc.residual,
          std::move(c)};
}

SchurComplement schur_complement(const HermitianMatrix& s, const Subspace& h1,
                                 const Tolerances& tol) {
  BlockPartition b = partition_blocks(s, h1, tol);
  const RangeCheck rc = check_range(b, s.norm(), tol);
  if (!rc.holds) {
    throw Error(ErrorCode::RangeConditionViolated,
                "range of the coupling block is not contained in the range of the corner "
                "(residual " + std::to_string(rc.residual) + ")");
  }
  HermitianMatrix c = complement_from(b, rc.s1_pinv);
  const Index n = s.dim();
  const Index k = b.s1.dim();
  Matrix emb = Matrix::Zero(n, n);
  emb.bottomRightCorner(n - k, n - k) = c.matrix();
  HermitianMatrix shorted = HermitianMatrix::symmetrize(b.rotation * emb * b.rotation.adjoint());
  return {std::move(c), std::move(shorted), std::move(b)};
}

MatrixSet quotient_set(const MatrixSet& set, const Subspace& h1, const Tolerances& tol) {
  std::vector<HermitianMatrix> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    try {
      out.push_back(schur_complement(set[i], h1, tol).complement);
    } catch (const Error& e) {
      throw Error(e.code(), "member " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return MatrixSet(std::move(out), set.labels());
}

}  // namespace loewner
