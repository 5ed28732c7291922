#include "loewner/infimum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loewner/bounds.hpp"
#include "loewner/parallel.hpp"
#include "loewner/random.hpp"
#include "loewner/schur.hpp"

namespace loewner {

InfimumReport finite_infimum(const MatrixSet& set, const Tolerances& tol) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < set.size() && below_all; ++j) {
      if (j != i) below_all = loewner_leq(set[i], set[j], tol);
    }
    if (below_all) return {true, set[i], i};
  }
  return {};
}

// ------------------------------------------------------------- commuting

void require_commuting(const MatrixSet& set, const Tolerances& tol) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (!commute(set[i], set[j], tol)) {
        throw Error(ErrorCode::NotCommutingFamily,
                    "members " + std::to_string(i) + " and " + std::to_string(j) +
                        " do not commute",
                    i);
      }
    }
  }
}

HermitianMatrix commuting_glb_recursive(const MatrixSet& set, const Tolerances& tol) {
  (void)tol;
  HermitianMatrix m = set[0];
  for (std::size_t j = 1; j < set.size(); ++j) {
    m = 0.5 * (m + set[j] - abs_value(m - set[j]));
  }
  return m;
}

HermitianMatrix commuting_glb_diagonal(const MatrixSet& set, const Tolerances& tol) {
  const Index n = set.dim();
  const double gap = tol.rank_rel * (1.0 + set.scale());
  std::vector<Matrix> blocks{Matrix::Identity(n, n)};
  for (const auto& a : set) {
    std::vector<Matrix> refined;
    for (const Matrix& q : blocks) {
      if (q.cols() == 1) {
        refined.push_back(q);
        continue;
      }
      const EigDecomposition e =
          spectral(HermitianMatrix::symmetrize(q.adjoint() * a.matrix() * q));
      Index start = 0;
      for (Index i = 1; i <= e.eigenvalues.size(); ++i) {
        if (i == e.eigenvalues.size() || e.eigenvalues(i) - e.eigenvalues(i - 1) > gap) {
          refined.push_back(q * e.eigenvectors.middleCols(start, i - start));
          start = i;
        }
      }
    }
    blocks = std::move(refined);
  }

  Matrix w(n, n);
  Index col = 0;
  for (const Matrix& q : blocks) {
    w.middleCols(col, q.cols()) = q;
    col += q.cols();
  }
  RealVector low(n);
  for (Index c = 0; c < n; ++c) {
    double v = 0.0;
    for (std::size_t j = 0; j < set.size(); ++j) {
      const double d = (w.col(c).adjoint() * set[j].matrix() * w.col(c))(0).real();
      v = j == 0 ? d : std::min(v, d);
    }
    low(c) = v;
  }
  return HermitianMatrix::symmetrize(w * low.cast<Complex>().asDiagonal() * w.adjoint());
}

HermitianMatrix commuting_glb(const MatrixSet& set, const Tolerances& tol) {
  require_commuting(set, tol);
  HermitianMatrix recursive = commuting_glb_recursive(set, tol);
  const HermitianMatrix diagonal = commuting_glb_diagonal(set, tol);
  const double gap = (recursive - diagonal).norm();
  if (gap > tol.eq_rel * (1.0 + set.scale())) {
    throw Error(ErrorCode::NumericalFailure,
                "recursive and diagonal routes disagree by " + std::to_string(gap));
  }
  return recursive;
}

CommutingAnalysis analyze_commuting_bounds(const MatrixSet& set, const Tolerances& tol) {
  const Index n = set.dim();
  const Index n2 = n * n;
  // vec(AX - XA) = (I (x) A - A^T (x) I) vec(X), column-major vec
  Matrix stacked(n2 * static_cast<Index>(set.size()), n2);
  const Matrix id = Matrix::Identity(n, n);
  for (std::size_t j = 0; j < set.size(); ++j) {
    const Matrix& a = set[j].matrix();
    Matrix block(n2, n2);
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        block.block(r * n, c * n, n, n) = id(r, c) * a - a(c, r) * id;
      }
    }
    stacked.middleRows(static_cast<Index>(j) * n2, n2) = block;
  }
  CommutingAnalysis out;
  out.commutant_dim = nullspace_basis(stacked, tol.eq_rel * (1.0 + set.scale())).cols();

  try {
    require_commuting(set, tol);
    out.commuting_family = true;
  } catch (const Error&) {
    out.commuting_family = false;
  }
  if (out.commuting_family) {
    out.greatest = commuting_glb(set, tol);
  } else if (out.commutant_dim == 1) {
    double floor = eigenvalues(set[0])(0);
    for (const auto& a : set) floor = std::min(floor, eigenvalues(a)(0));
    out.greatest = HermitianMatrix::identity(n) * floor;
  }
  return out;
}

// ------------------------------------------------------ maximal lower bounds

namespace {

HermitianMatrix positive_maximal_rec(const MatrixSet& set, const Tolerances& tol, double scale) {
  const Index n = set.dim();
  std::vector<EigDecomposition> eig;
  eig.reserve(set.size());
  for (const auto& a : set) eig.push_back(spectral(a));
  double gamma = eig[0].eigenvalues(0);
  for (const auto& e : eig) gamma = std::min(gamma, e.eigenvalues(0));
  if (n == 1) return HermitianMatrix::diagonal({gamma});

  std::size_t pick = 0;
  while (eig[pick].eigenvalues(0) > gamma + tol.rank_rel * scale) ++pick;
  const Vector u = eig[pick].eigenvectors.col(0);

  const Subspace h1 = make_subspace_unchecked(n, u);
  const MatrixSet shifted = set.shifted(HermitianMatrix::identity(n) * -gamma);
  const MatrixSet reduced = quotient_set(shifted, h1, tol);
  const HermitianMatrix inner = positive_maximal_rec(reduced, tol, scale);

  Matrix rot(n, n);
  rot << u, h1.complement().basis();
  Matrix local = Matrix::Zero(n, n);
  local.bottomRightCorner(n - 1, n - 1) = inner.matrix();
  return HermitianMatrix::symmetrize(rot * local * rot.adjoint()) +
         HermitianMatrix::identity(n) * gamma;
}

}  // namespace

HermitianMatrix positive_maximal_lb(const MatrixSet& set, const Tolerances& tol) {
  for (std::size_t i = 0; i < set.size(); ++i) require_psd(set[i], tol, "member", i);
  return positive_maximal_rec(set, tol, std::max(1.0, set.scale()));
}

HermitianMatrix extend_to_maximal(const HermitianMatrix& l, const MatrixSet& set,
                                  const Tolerances& tol) {
  if (!is_lower_bound(l, set, tol)) {
    throw Error(ErrorCode::NotLowerBound, "starting matrix is not a lower bound of the set");
  }
  return l + positive_maximal_lb(set.shifted(-l), tol);
}

std::vector<HermitianMatrix> distinct_maximals(const MatrixSet& set, std::size_t count,
                                               const Tolerances& tol, std::uint64_t seed) {
  if (count < 2) throw Error(ErrorCode::ValidationError, "count must be at least 2");
  if (finite_infimum(set, tol).exists) {
    throw Error(ErrorCode::InfimumExists, "the set has an infimum, its only maximal lower bound");
  }
  const Index n = set.dim();
  const double scale = set.scale();
  const double separation = 100.0 * tol.eq_rel * (1.0 + scale);
  const bool pair = set.size() == 2;

  double floor = eigenvalues(set[0])(0);
  for (const auto& a : set) floor = std::min(floor, eigenvalues(a)(0));
  const HermitianMatrix first =
      pair ? mlb_mt(set[0], set[1], Matrix::Identity(n, n), tol)
           : extend_to_maximal(HermitianMatrix::identity(n) * floor, set, tol);

  constexpr int kAttempts = 8;
  std::string last_problem;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
    std::vector<HermitianMatrix> out{first};
    if (pair) {
      out.push_back(mlb_mt(set[0], set[1], random_invertible(n, rng), tol));
    } else {
      const Vector v = random_unit_vector(n, rng);
      const HermitianMatrix dip =
          HermitianMatrix::symmetrize(0.5 * (1.0 + scale) * v * v.adjoint());
      out.push_back(extend_to_maximal(first - dip, set, tol));
    }
    while (out.size() < count) {
      out.push_back(extend_to_maximal(0.5 * (first + out.back()), set, tol));
    }

    bool ok = true;
    for (std::size_t i = 0; i < out.size() && ok; ++i) {
      if (!certify_maximal(out[i], set, tol).is_maximal) {
        ok = false;
        last_problem = "candidate " + std::to_string(i) + " failed its certificate";
        break;
      }
      for (std::size_t j = 0; j < i; ++j) {
        if ((out[i] - out[j]).norm() <= separation) {
          ok = false;
          last_problem = "candidates " + std::to_string(j) + " and " + std::to_string(i) +
                         " coincide";
          break;
        }
      }
    }
    if (ok) return out;
  }
  throw Error(ErrorCode::DistinctnessFailure,
              "no distinct maximal lower bounds after retries: " + last_problem);
}

// ------------------------------------------------- greatest positive bound

PositiveGlbReport positive_glb_family(const MatrixSet& set, const Tolerances& tol) {
  for (std::size_t i = 0; i < set.size(); ++i) require_psd(set[i], tol, "member", i);
  const double scale = set.scale();
  HermitianMatrix s = parallel_sum(set, tol);
  Subspace k = range_nullspace(s, tol, scale).range;

  std::vector<HermitianMatrix> tilde;
  tilde.reserve(set.size());
  for (const auto& a : set) tilde.push_back(ando_limit(s, a, tol, scale));
  MatrixSet tilde_set(std::move(tilde), set.labels());

  const InfimumReport inf = finite_infimum(tilde_set, tol);
  PositiveGlbReport out{std::move(k), std::move(s), std::move(tilde_set), inf.exists,
                        inf.infimum,  inf.minimizing_index, true,          std::nullopt};

  if (out.glb) {
    const Index n = set.dim();
    const Matrix leak = (Matrix::Identity(n, n) - out.k_subspace.projector()) * out.glb->matrix();
    out.range_in_k = op_norm(leak) <= tol.eq_rel * (1.0 + out.glb->norm());
  } else if (out.k_subspace.dim() <= 1) {
    throw Error(ErrorCode::NumericalFailure,
                "greatest positive lower bound must exist when the range intersection has "
                "dimension at most one");
  }

  if (set.size() == 2) {
    const TwoOpGlbResult pr = two_op_positive_glb(set[0], set[1], tol);
    bool agree = pr.exists == out.exists;
    if (agree && out.exists) {
      agree = (*pr.glb - *out.glb).norm() <= tol.eq_rel * (1.0 + scale);
    }
    out.agrees_with_pair_route = agree;
  }
  return out;
}

}  // namespace loewner
