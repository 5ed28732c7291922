#include "loewner/parallel.hpp"

#include <string>

namespace loewner {

void require_psd(const HermitianMatrix& s, const Tolerances& tol, const char* what,
                 std::optional<std::size_t> index) {
  if (!is_psd(s, tol)) {
    std::string msg = std::string(what) + " is not positive semidefinite";
    if (index) msg += " (member " + std::to_string(*index) + ")";
    throw Error(ErrorCode::NotPositiveSemidefinite, msg, index);
  }
}

HermitianMatrix parallel_sum(const HermitianMatrix& a, const HermitianMatrix& b,
                             const Tolerances& tol) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "parallel sum of unequal dims");
  require_psd(a, tol, "left operand");
  require_psd(b, tol, "right operand");
  const HermitianMatrix sum_pinv = pinv(a + b, tol);
  return HermitianMatrix::symmetrize(a.matrix() * sum_pinv.matrix() * b.matrix());
}

HermitianMatrix parallel_sum(const MatrixSet& family, const Tolerances& tol) {
  for (std::size_t i = 0; i < family.size(); ++i) require_psd(family[i], tol, "member", i);
  HermitianMatrix acc = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) acc = parallel_sum(acc, family[i], tol);
  return acc;
}

HermitianMatrix ando_limit(const HermitianMatrix& a, const HermitianMatrix& b,
                           const Tolerances& tol, double scale) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "Ando limit of unequal dims");
  require_psd(a, tol, "left operand");
  require_psd(b, tol, "right operand");
  const Index n = a.dim();
  const HermitianMatrix root_b = sqrt_psd(b, tol);
  const Subspace range_a = range_nullspace(a, tol, scale).range;
  const Matrix leak = (Matrix::Identity(n, n) - range_a.projector()) * root_b.matrix();
  // x is kept when B^{1/2} x lies within the shared principal-angle
  // threshold of range(A); a computed range is only accurate to such angles
  const double cut = angle_threshold_sine(tol) * root_b.norm();
  const Matrix v = nullspace_basis(leak, cut);
  return HermitianMatrix::symmetrize(root_b.matrix() * (v * v.adjoint()) * root_b.matrix());
}

TwoOpGlbResult two_op_positive_glb(const HermitianMatrix& a, const HermitianMatrix& b,
                                   const Tolerances& tol) {
  HermitianMatrix ab = ando_limit(a, b, tol);
  HermitianMatrix ba = ando_limit(b, a, tol);
  const Order o = loewner_compare(ab, ba, tol).order;
  std::optional<HermitianMatrix> glb;
  switch (o) {
    case Order::equal:
    case Order::below: glb = ab; break;
    case Order::above: glb = ba; break;
    case Order::incomparable: break;
  }
  const bool exists = glb.has_value();
  return {exists, std::move(glb), std::move(ab), std::move(ba), o};
}

}  // namespace loewner
