#include "loewner/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loewner/infimum.hpp"
#include "loewner/schur.hpp"

namespace loewner {

namespace {

void require_dim(const HermitianMatrix& m, const MatrixSet& set) {
  if (m.dim() != set.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "candidate has dimension " +
                                                  std::to_string(m.dim()) + ", set has " +
                                                  std::to_string(set.dim()));
  }
}

}  // namespace

bool is_lower_bound(const HermitianMatrix& l, const MatrixSet& set, const Tolerances& tol) {
  require_dim(l, set);
  return std::all_of(set.begin(), set.end(),
                     [&](const HermitianMatrix& a) { return loewner_leq(l, a, tol); });
}

MaximalityCertificate certify_maximal(const HermitianMatrix& m, const MatrixSet& set,
                                      const Tolerances& tol) {
  require_dim(m, set);
  const double scale = std::max(set.scale(), m.norm());
  MaximalityCertificate cert;
  cert.ambient_dim = set.dim();
  cert.is_lower_bound = is_lower_bound(m, set, tol);

  std::vector<Subspace> nulls;
  std::vector<Subspace> ranges;
  nulls.reserve(set.size());
  ranges.reserve(set.size());
  for (const auto& a : set) {
    RangeNullspace rn = range_nullspace(a - m, tol, scale);
    cert.per_member_nullspace_dims.push_back(rn.nullspace.dim());
    nulls.push_back(std::move(rn.nullspace));
    ranges.push_back(std::move(rn.range));
  }
  cert.span_dim = subspace_sum(nulls, tol).dim();
  cert.ranges_intersect_trivially = subspace_intersect(ranges, tol).dim() == 0;
  const bool spans = cert.span_dim == cert.ambient_dim;
  cert.criteria_agree = spans == cert.ranges_intersect_trivially;
  cert.is_maximal = cert.is_lower_bound && spans;
  return cert;
}

bool is_extreme_certified(const HermitianMatrix& m, const MatrixSet& set, const Tolerances& tol) {
  return certify_maximal(m, set, tol).is_maximal;
}

HermitianMatrix mlb_mt(const HermitianMatrix& a, const HermitianMatrix& b, const Matrix& t,
                       const Tolerances& tol) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "pair of unequal dims");
  if (t.rows() != a.dim() || t.cols() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "transform must be square of the pair's dimension");
  }
  Eigen::JacobiSVD<Matrix> svd(t);
  const RealVector& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= tol.rank_rel * sv(0)) {
    throw Error(ErrorCode::SingularTransform, "transform is numerically singular");
  }
  const Matrix t_inv = t.fullPivLu().inverse();
  const HermitianMatrix inner = (a - b).congruence(t_inv);
  const HermitianMatrix spread = abs_value(inner).congruence(t);
  return 0.5 * (a + b - spread);
}

ConstrainedResult constrained_at_vector(const MatrixSet& set, const Vector& u,
                                        const Tolerances& tol) {
  const Index n = set.dim();
  if (u.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector has wrong length");
  if (std::abs(u.norm() - 1.0) > tol.eq_rel) {
    throw Error(ErrorCode::NotUnitVector, "u has norm " + std::to_string(u.norm()));
  }
  const double scale = 1.0 + set.scale();
  ConstrainedResult r;

  std::vector<double> values;
  values.reserve(set.size());
  for (const auto& a : set) values.push_back((u.adjoint() * a.matrix() * u)(0).real());
  r.alpha = *std::min_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= r.alpha + tol.eq_rel * scale) r.attaining.push_back(i);
  }

  r.attaining_members_agree = true;
  for (std::size_t x = 0; x < r.attaining.size() && r.attaining_members_agree; ++x) {
    for (std::size_t y = x + 1; y < r.attaining.size(); ++y) {
      const Vector d = set[r.attaining[x]].matrix() * u - set[r.attaining[y]].matrix() * u;
      if (d.norm() > tol.eq_rel * scale) {
        r.attaining_members_agree = false;
        break;
      }
    }
  }
  r.bounds_at_u_empty = !r.attaining_members_agree;
  if (!r.attaining_members_agree) return r;

  // u itself, not a phase-normalized copy, spans h1 so that blocks are
  // expressed against the caller's vector
  const Subspace h1 = make_subspace_unchecked(n, u / u.norm());
  if (n == 1) {
    r.rotation = h1.basis();
    r.witness_coupling = Matrix(1, 0);
    return r;
  }
  const BlockPartition witness = partition_blocks(set[r.attaining.front()], h1, tol);
  r.rotation = witness.rotation;
  r.witness_coupling = witness.s12;

  std::vector<HermitianMatrix> reduced;
  reduced.reserve(set.size());
  for (const auto& a : set) {
    const BlockPartition b = partition_blocks(a, h1, tol);
    const double gap = b.s1(0, 0).real() - r.alpha;
    // scalar Moore-Penrose inverse; zero maps to zero
    const double gap_pinv = std::abs(gap) <= tol.rank_rel * scale ? 0.0 : 1.0 / gap;
    const Matrix diff = b.s12 - witness.s12;
    reduced.push_back(
        HermitianMatrix::symmetrize(b.s2.matrix() - gap_pinv * diff.adjoint() * diff));
  }
  r.reduced_set = MatrixSet(std::move(reduced), set.labels());
  return r;
}

std::optional<HermitianMatrix> maximal_in_lu(const MatrixSet& set, const Vector& u,
                                             const Tolerances& tol) {
  const ConstrainedResult r = constrained_at_vector(set, u, tol);
  if (r.bounds_at_u_empty) return std::nullopt;
  const Index n = set.dim();
  if (n == 1) return HermitianMatrix::diagonal({r.alpha});

  const MatrixSet& reduced = *r.reduced_set;
  double floor = eigenvalues(reduced[0])(0);
  for (const auto& a : reduced) floor = std::min(floor, eigenvalues(a)(0));
  const HermitianMatrix m2 =
      extend_to_maximal(HermitianMatrix::identity(reduced.dim()) * floor, reduced, tol);

  Matrix local(n, n);
  local(0, 0) = r.alpha;
  local.topRightCorner(1, n - 1) = r.witness_coupling;
  local.bottomLeftCorner(n - 1, 1) = r.witness_coupling.adjoint();
  local.bottomRightCorner(n - 1, n - 1) = m2.matrix();
  return HermitianMatrix::symmetrize(r.rotation * local * r.rotation.adjoint());
}

}  // namespace loewner
