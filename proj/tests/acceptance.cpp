// Acceptance suite: one PASS/FAIL line per criterion. Oracles below use
// Eigen directly (Cholesky, dense eigen/SVD) rather than library routines.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "loewner/bounds.hpp"
#include "loewner/cli/fixtures.hpp"
#include "loewner/infimum.hpp"
#include "loewner/parallel.hpp"
#include "loewner/random.hpp"
#include "loewner/schur.hpp"
#include "loewner/stott.hpp"

using namespace loewner;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// ---- independent oracles ------------------------------------------------

RealVector eig(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double opnorm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

// S >= 0 up to eps, by Cholesky of S + eps I.
bool chol_psd(const Matrix& s, double eps) {
  Eigen::LLT<Matrix> llt(0.5 * (s + s.adjoint()) + eps * Matrix::Identity(s.rows(), s.cols()));
  return llt.info() == Eigen::Success;
}

bool oracle_lower_bound(const Matrix& m, const std::vector<Matrix>& set, double scale) {
  for (const auto& a : set) {
    if (!chol_psd(a - m, 1e-9 * (1 + scale))) return false;
  }
  return true;
}

// Null spaces of A_j - M (eigenvalues below 1e-8 (1 + scale)) span C^n.
bool oracle_maximal(const Matrix& m, const std::vector<Matrix>& set, double scale) {
  const Index n = m.rows();
  Matrix stack(n, 0);
  for (const auto& a : set) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * ((a - m) + (a - m).adjoint()));
    for (Index k = 0; k < n; ++k) {
      if (std::abs(es.eigenvalues()(k)) <= 1e-8 * (1 + scale)) {
        stack.conservativeResize(n, stack.cols() + 1);
        stack.col(stack.cols() - 1) = es.eigenvectors().col(k);
      }
    }
  }
  if (stack.cols() < n) return false;
  Eigen::JacobiSVD<Matrix> svd(stack);
  return svd.singularValues()(n - 1) > 1e-6;
}

std::vector<Matrix> raw(const MatrixSet& set) {
  std::vector<Matrix> out;
  for (const auto& a : set) out.push_back(a.matrix());
  return out;
}

// Shorted operator of B onto span(v) (v with orthonormal columns), by the
// Schur complement of B over the orthogonal complement, with an SVD pinv.
Matrix oracle_shorted(const Matrix& b, const Matrix& v) {
  const Index n = b.rows();
  if (v.cols() == n) return b;
  Eigen::HouseholderQR<Matrix> qr(v);
  const Matrix full = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix w = full.rightCols(n - v.cols());
  const Matrix b11 = w.adjoint() * b * w;
  const Matrix b12 = w.adjoint() * b * v;
  const Matrix b22 = v.adjoint() * b * v;
  Eigen::JacobiSVD<Matrix> svd(b11, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double cut = 1e-10 * std::max(1.0, opnorm(b));
  RealVector inv = svd.singularValues();
  for (Index k = 0; k < inv.size(); ++k) inv(k) = inv(k) > cut ? 1.0 / inv(k) : 0.0;
  const Matrix pinv = svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
  return v * (b22 - b12.adjoint() * pinv * b12) * v.adjoint();
}

Matrix orthonormal_columns(const Matrix& g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
}

Matrix oracle_mt(const Matrix& a, const Matrix& b, const Matrix& t) {
  const Matrix ti = t.inverse();
  const Matrix c = ti.adjoint() * (a - b) * ti;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (c + c.adjoint()));
  const Matrix abs_c = es.eigenvectors() * es.eigenvalues().cwiseAbs().cast<Complex>().asDiagonal() *
                       es.eigenvectors().adjoint();
  return 0.5 * (a + b - t.adjoint() * abs_c * t);
}

Index uniform(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---- criteria -------------------------------------------------------------

Verdict example_62() {
  const Tolerances tol;
  Verdict v;
  const MatrixSet set = cli::make_fixture("ex6.2", 1).set;
  const HermitianMatrix m = positive_maximal_lb(set, tol);
  const Matrix want = HermitianMatrix::diagonal({0.5, 0}).matrix();
  const double err = (m.matrix() - want).cwiseAbs().maxCoeff();
  v.require(err <= 1e-12, "positive-mlb differs from diag(0.5, 0) by " + fmt(err));
  v.require(oracle_maximal(m.matrix(), raw(set), set.scale()), "diag(0.5, 0) fails the span oracle");

  const CommutingAnalysis c = analyze_commuting_bounds(set, tol);
  v.require(c.greatest.has_value(), "greatest commuting lower bound undetermined");
  if (c.greatest) {
    v.require(opnorm(c.greatest->matrix()) <= 1e-12, "greatest commuting lower bound is not 0");
    v.require(!certify_maximal(*c.greatest, set, tol).is_maximal, "0 passes the maximality certificate");
  }
  // commutant of both members: null space of the stacked Kronecker operators
  Matrix k(8, 4);
  const Matrix i2 = Matrix::Identity(2, 2);
  for (int j = 0; j < 2; ++j) {
    const Matrix& a = set[static_cast<std::size_t>(j)].matrix();
    Matrix op(4, 4);
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) op.block(2 * r, 2 * s, 2, 2) = i2(r, s) * a - a.transpose()(r, s) * i2;
    }
    k.middleRows(4 * j, 4) = op;
  }
  Eigen::FullPivLU<Matrix> lu(k);
  lu.setThreshold(1e-10);
  v.require(4 - lu.rank() == 1, "commutant is not the scalars");
  v.require(!oracle_maximal(Matrix::Zero(2, 2), raw(set), set.scale()), "0 passes the span oracle");
  v.detail = v.pass ? "M = diag(0.5, 0) within " + fmt(err) + "; G = 0, not maximal" : v.detail;
  return v;
}

Verdict anti_lattice() {
  const Tolerances tol;
  Verdict v;
  double min_sep = 1e300;
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    Rng rng = make_rng(2002, trial);
    const Index n = uniform(rng, 2, 5);
    const HermitianMatrix a = random_hermitian(n, rng);
    HermitianMatrix b = random_hermitian(n, rng);
    // reject comparable pairs with the Cholesky oracle
    while (chol_psd(b.matrix() - a.matrix(), 0) || chol_psd(a.matrix() - b.matrix(), 0)) {
      b = random_hermitian(n, rng);
    }
    const MatrixSet set({a, b});
    const double scale = set.scale();
    v.require(!finite_infimum(set, tol).exists, "infimum reported at trial " + std::to_string(trial));
    const auto maxima = distinct_maximals(set, 3, tol, trial);
    v.require(maxima.size() == 3, "fewer than 3 maximal bounds");
    for (std::size_t i = 0; i < maxima.size(); ++i) {
      v.require(oracle_lower_bound(maxima[i].matrix(), raw(set), scale) &&
                    oracle_maximal(maxima[i].matrix(), raw(set), scale),
                "uncertified maximal bound at trial " + std::to_string(trial));
      for (std::size_t j = i + 1; j < maxima.size(); ++j) {
        const double d = opnorm(maxima[i].matrix() - maxima[j].matrix()) / scale;
        min_sep = std::min(min_sep, d);
        v.require(d > 1e-6, "maximal bounds too close at trial " + std::to_string(trial));
      }
    }
  }
  if (v.pass) v.detail = "500/500 without infimum; min separation " + fmt(min_sep) + " x scale";
  return v;
}

Verdict stott() {
  const Tolerances tol;
  Verdict v;
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng = make_rng(2003, trial);
    const Index p = uniform(rng, 1, 4);
    const Index q = uniform(rng, 1, 4);
    const Matrix x = random_gaussian(p, q, rng);
    const StottPair pair = stott_mx({p, q, x}, tol);
    const double err = opnorm(x - stott_recover_x(pair.mx, p, q, tol).x);
    worst = std::max(worst, err);
    v.require(err <= 1e-8, "round trip error " + fmt(err) + " at trial " + std::to_string(trial));
    const MatrixSet jzero({signature_matrix(p, q), HermitianMatrix::zero(p + q)});
    v.require(certify_maximal(pair.mx, jzero, tol).is_maximal &&
                  oracle_maximal(pair.mx.matrix(), raw(jzero), 1.0),
              "M(X) not maximal at trial " + std::to_string(trial));
  }
  if (v.pass) v.detail = "200/200; max |X - X'| = " + fmt(worst);
  return v;
}

Verdict mt_family() {
  const Tolerances tol;
  Verdict v;
  double worst_eq = 0.0;
  double worst_polar = 0.0;
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    Rng rng = make_rng(2004, trial);
    const Index n = uniform(rng, 1, 6);
    const HermitianMatrix a = random_hermitian(n, rng);
    const HermitianMatrix b = random_hermitian(n, rng);
    const Matrix t = random_invertible(n, rng);
    const Matrix s = random_invertible(n, rng);
    const MatrixSet set({a, b});
    const HermitianMatrix m = mlb_mt(a, b, t, tol);
    const std::string at = " at trial " + std::to_string(trial);
    v.require(opnorm(m.matrix() - oracle_mt(a.matrix(), b.matrix(), t)) <= 1e-10 * (1 + m.norm()),
              "M_T differs from the direct formula" + at);
    v.require(is_lower_bound(m, set, tol) && oracle_lower_bound(m.matrix(), raw(set), set.scale()),
              "M_T is not a lower bound" + at);
    v.require(certify_maximal(m, set, tol).is_maximal && oracle_maximal(m.matrix(), raw(set), set.scale()),
              "M_T is not maximal" + at);
    const Matrix moved = s.adjoint() * m.matrix() * s;
    const double eq = opnorm(mlb_mt(a.congruence(s), b.congruence(s), t * s, tol).matrix() - moved) /
                      (1 + opnorm(moved));
    Eigen::SelfAdjointEigenSolver<Matrix> es(t.adjoint() * t);
    const Matrix abs_t = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cast<Complex>().asDiagonal() *
                         es.eigenvectors().adjoint();
    const double polar = opnorm(mlb_mt(a, b, abs_t, tol).matrix() - m.matrix()) / (1 + m.norm());
    worst_eq = std::max(worst_eq, eq);
    worst_polar = std::max(worst_polar, polar);
    v.require(eq <= 1e-8, "equivariance residual " + fmt(eq) + at);
    v.require(polar <= 1e-8, "polar residual " + fmt(polar) + at);
  }
  if (v.pass) {
    v.detail = "300/300; equivariance " + fmt(worst_eq) + ", polar " + fmt(worst_polar);
  }
  return v;
}

Verdict commuting() {
  const Tolerances tol;
  Verdict v;
  double worst_routes = 0.0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng = make_rng(2005, trial);
    const Index n = uniform(rng, 2, 6);
    const std::size_t count = static_cast<std::size_t>(uniform(rng, 2, 5));
    const bool degenerate = trial % 2 == 0;
    const Matrix u = random_unitary(n, rng);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    std::vector<RealVector> diags;
    std::vector<HermitianMatrix> members;
    for (std::size_t j = 0; j < count; ++j) {
      RealVector d(n);
      for (Index i = 0; i < n; ++i) d(i) = degenerate ? std::round(2 * entry(rng)) / 2 : entry(rng);
      diags.push_back(d);
      members.push_back(HermitianMatrix::symmetrize(u * d.cast<Complex>().asDiagonal() * u.adjoint()));
    }
    const MatrixSet set(members);
    const double scale = set.scale();
    const std::string at = " at trial " + std::to_string(trial);
    const HermitianMatrix rec = commuting_glb_recursive(set, tol);
    const HermitianMatrix dia = commuting_glb_diagonal(set, tol);
    const double routes = opnorm(rec.matrix() - dia.matrix()) / (1 + scale);
    worst_routes = std::max(worst_routes, routes);
    v.require(routes <= 1e-10, "routes differ by " + fmt(routes) + at);

    RealVector dmin = diags[0];
    for (const auto& d : diags) dmin = dmin.cwiseMin(d);
    const Matrix expect = u * dmin.cast<Complex>().asDiagonal() * u.adjoint();
    v.require(opnorm(dia.matrix() - expect) <= 1e-10 * (1 + scale), "glb differs from U min(D) U^H" + at);
    for (const auto& a : set) {
      const double c = opnorm(dia.matrix() * a.matrix() - a.matrix() * dia.matrix());
      v.require(c <= 1e-9 * scale, "commutator " + fmt(c) + at);
    }
    // commuting lower bounds: U (Dmin - Q) U^H, Q >= 0 on joint eigenspaces
    std::map<std::vector<double>, std::vector<Index>> blocks;
    for (Index i = 0; i < n; ++i) {
      std::vector<double> key;
      for (const auto& d : diags) key.push_back(d(i));
      blocks[key].push_back(i);
    }
    for (int c = 0; c < 50; ++c) {
      Matrix q = Matrix::Zero(n, n);
      for (const auto& [key, idx] : blocks) {
        const Index k = static_cast<Index>(idx.size());
        const Matrix g = random_gaussian(k, k, rng);
        const Matrix block = g * g.adjoint() * (c % 5 == 0 ? 1e-6 : 1.0);
        for (Index r = 0; r < k; ++r) {
          for (Index s = 0; s < k; ++s) q(idx[r], idx[s]) = block(r, s);
        }
      }
      const Matrix cand = u * (Matrix(dmin.cast<Complex>().asDiagonal()) - q) * u.adjoint();
      v.require(chol_psd(dia.matrix() - cand, 1e-9 * (1 + scale)), "candidate not dominated" + at);
    }
  }
  if (v.pass) v.detail = "200/200; max route difference " + fmt(worst_routes);
  return v;
}

Verdict positive_mlb() {
  const Tolerances tol;
  Verdict v;
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    Rng rng = make_rng(2006, trial);
    const Index n = uniform(rng, 2, 5);
    const std::size_t count = static_cast<std::size_t>(uniform(rng, 2, 4));
    std::vector<HermitianMatrix> members;
    for (std::size_t j = 0; j < count; ++j) members.push_back(random_psd(n, uniform(rng, 1, n), rng));
    const MatrixSet set(members);
    const double scale = set.scale();
    const std::vector<Matrix> mats = raw(set);
    const std::string at = " at trial " + std::to_string(trial);
    const HermitianMatrix m = positive_maximal_lb(set, tol);
    const double lmin = eig(m.matrix())(0);
    worst = std::min(worst, lmin / scale);
    v.require(lmin >= -1e-9 * scale, "output not PSD" + at);
    v.require(oracle_lower_bound(m.matrix(), mats, scale), "output not a lower bound" + at);
    v.require(certify_maximal(m, set, tol).is_maximal && oracle_maximal(m.matrix(), mats, scale),
              "output fails the certificate" + at);
    for (int k = 0; k < 1000 && v.pass; ++k) {
      const Vector x = random_gaussian(n, 1, rng).col(0).normalized();
      const double size = std::pow(10.0, -4 + (k % 4)) * (1 + scale);
      const Matrix bumped = m.matrix() + size * x * x.adjoint();
      bool lower = true;
      for (const auto& a : mats) lower = lower && chol_psd(a - bumped, 1e-12 * (1 + scale));
      v.require(!lower, "a strictly larger lower bound exists" + at);
    }
  }
  if (v.pass) v.detail = "500/500, 1000 bumps each; min lambda_min / scale " + fmt(worst);
  return v;
}

Verdict albert() {
  const Tolerances tol;
  Verdict v;
  int agree = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    Rng rng = make_rng(2007, trial);
    const Index n = uniform(rng, 2, 6);
    RealVector lambda(n);
    std::uniform_real_distribution<double> mag(0.1, 3.0);
    const int kind = static_cast<int>(trial % 4);
    for (Index i = 0; i < n; ++i) {
      switch (kind) {
        case 0: lambda(i) = mag(rng); break;                                   // definite
        case 1: lambda(i) = i < n / 2 ? 0.0 : mag(rng); break;                 // singular PSD
        case 2: lambda(i) = (rng() % 2 ? 1 : -1) * mag(rng); break;            // mixed signs
        default: lambda(i) = i == 0 ? -1e-4 : (i < n / 2 ? 0.0 : mag(rng));   // barely not PSD
      }
    }
    const Matrix u = random_unitary(n, rng);
    const HermitianMatrix s = HermitianMatrix::symmetrize(u * lambda.cast<Complex>().asDiagonal() * u.adjoint());
    const Subspace h1 = Subspace::span(random_gaussian(n, uniform(rng, 1, n - 1), rng), tol);
    Eigen::JacobiSVD<Matrix> svd(s.matrix());
    const bool spectral = eig(s.matrix())(0) >= -1e-9 * svd.singularValues()(0);
    const bool block = albert_is_psd(s, h1, tol).psd;
    if (spectral == block) ++agree;
  }
  v.require(agree == 1000, std::to_string(agree) + "/1000 agree");
  if (v.pass) v.detail = "1000/1000 agree";
  return v;
}

Verdict parallel() {
  const Tolerances tol;
  Verdict v;
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1, 1}, {2, 3}, {0.5, 4}, {1e-3, 7}, {0, 2}, {5, 0}}) {
    const double got = parallel_sum(HermitianMatrix::diagonal({a}), HermitianMatrix::diagonal({b}), tol)(0, 0).real();
    const double want = a + b == 0 ? 0 : a * b / (a + b);
    v.require(std::abs(got - want) <= 1e-12, "scalar a:b mismatch for " + fmt(a) + ", " + fmt(b));
  }
  double worst_identity = 0.0;
  int routes_agree = 0;
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    Rng rng = make_rng(2008, trial);
    const Index n = uniform(rng, 2, 6);
    const Index ra = uniform(rng, 1, n);
    const Index rb = uniform(rng, 1, n);
    const Index shared = uniform(rng, 0, std::min(ra, rb));
    const Matrix common = random_gaussian(n, shared, rng);
    Matrix ga(n, ra);
    Matrix gb(n, rb);
    ga << common, random_gaussian(n, ra - shared, rng);
    gb << common, random_gaussian(n, rb - shared, rng);
    const HermitianMatrix a = HermitianMatrix::symmetrize(ga * ga.adjoint());
    const HermitianMatrix b = HermitianMatrix::symmetrize(gb * gb.adjoint());
    const double scale = std::max(a.norm(), b.norm());
    const std::string at = " at trial " + std::to_string(trial);

    // generic position: dim(range A n range B) = ra + rb - min(n, ra + rb - shared)
    const Index meet = ra + rb - std::min(n, ra + rb - shared);
    const HermitianMatrix ab = parallel_sum(a, b, tol);
    const RealVector ev = eig(ab.matrix()).cwiseAbs();
    Index rank = 0;
    for (Index i = 0; i < n; ++i) rank += ev(i) > 1e-10 * scale ? 1 : 0;
    v.require(rank == meet, "rank(A:B) = " + std::to_string(rank) + ", expected " + std::to_string(meet) + at);

    const HermitianMatrix lhs = ando_limit(ab, b, tol, scale);
    const HermitianMatrix rhs = ando_limit(a, b, tol);
    const double identity = opnorm(lhs.matrix() - rhs.matrix()) / (1 + scale);
    worst_identity = std::max(worst_identity, identity);
    v.require(identity <= 1e-9, "[A:B]B - [A]B = " + fmt(identity) + at);
    const Matrix shorted = oracle_shorted(b.matrix(), orthonormal_columns(ga));
    v.require(opnorm(rhs.matrix() - shorted) <= 1e-8 * (1 + scale), "[A]B differs from the shorted oracle" + at);

    const TwoOpGlbResult two = two_op_positive_glb(a, b, tol);
    const PositiveGlbReport fam = positive_glb_family(MatrixSet({a, b}), tol);
    const bool same = two.exists == fam.exists &&
                      (!two.exists || opnorm(two.glb->matrix() - fam.glb->matrix()) <= 1e-9 * (1 + scale));
    if (same) ++routes_agree;
  }
  v.require(routes_agree == 300, "two-operator and family routes agree " + std::to_string(routes_agree) + "/300");
  if (v.pass) v.detail = "scalars exact; 300/300 ranks; identity " + fmt(worst_identity) + "; routes 300/300";
  return v;
}

Verdict contraction_projection() {
  const Tolerances tol;
  Verdict v;
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = make_rng(2009, trial);
    const Index n = uniform(rng, 2, 6);
    const Index r = uniform(rng, 1, n - 1);
    const HermitianMatrix a = random_psd_contraction(n, rng);
    const Matrix basis = orthonormal_columns(random_gaussian(n, r, rng));
    const HermitianMatrix p = HermitianMatrix::symmetrize(basis * basis.adjoint());
    const PositiveGlbReport g = positive_glb_family(MatrixSet({a, p}), tol);
    v.require(g.exists, "no glb at trial " + std::to_string(trial));
    if (!g.exists) continue;
    const double d = opnorm(g.glb->matrix() - oracle_shorted(a.matrix(), basis));
    worst = std::max(worst, d);
    v.require(d <= 1e-9, "glb differs from the shorted operator by " + fmt(d));
  }
  if (v.pass) v.detail = "100/100 exist; max difference " + fmt(worst);
  return v;
}

Verdict truncation_law() {
  const Tolerances tol;
  Verdict v;
  double prev = 1e300;
  std::string values;
  for (int big_n : {2, 5, 10, 50, 100}) {
    const MatrixSet set = cli::make_fixture("ex4.3", big_n).set;
    const PositiveGlbReport g = positive_glb_family(set, tol);
    v.require(g.exists, "no glb for N = " + std::to_string(big_n));
    if (!g.exists) continue;
    const Matrix want = HermitianMatrix::diagonal({1.0 / big_n, 0}).matrix();
    const double err = (g.glb->matrix() - want).cwiseAbs().maxCoeff();
    v.require(err <= 1e-10, "N = " + std::to_string(big_n) + " off by " + fmt(err));
    const double top = g.glb->matrix()(0, 0).real();
    v.require(top < prev, "not decreasing at N = " + std::to_string(big_n));
    prev = top;
    values += (values.empty() ? "" : ", ") + fmt(top);
  }
  if (v.pass) v.detail = "glb(0,0) = " + values + " -> 0";
  return v;
}

Verdict constrained_emptiness() {
  const Tolerances tol;
  Verdict v;
  const HermitianMatrix a = HermitianMatrix::real({{1, 1}, {1, 1}});
  const HermitianMatrix b = HermitianMatrix::real({{1, 2}, {2, 4}});
  const MatrixSet core({a, b});
  Vector e1 = Vector::Zero(2);
  e1(0) = 1;
  // both attain (Au, u) = 1 but Au != Bu
  v.require(opnorm(a.matrix() * e1 - b.matrix() * e1) > 0.5, "oracle: Au = Bu");
  const ConstrainedResult c = constrained_at_vector(core, e1, tol);
  v.require(std::abs(c.alpha - 1.0) <= 1e-12, "alpha != 1");
  v.require(c.attaining.size() == 2, "both members should attain alpha");
  v.require(!c.attaining_members_agree, "attaining members reported to agree at u");
  v.require(c.bounds_at_u_empty, "lower bounds at u reported nonempty");
  v.require(!maximal_in_lu(core, e1, tol).has_value(), "a bound attaining alpha was produced");
  if (v.pass) v.detail = "alpha = 1 attained by both, Au != Bu, no bound attains alpha at e1";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no runtime limit
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "two-matrix example: positive mlb and commuting glb", 0.1, example_62},
      {2, "anti-lattice on incomparable pairs", 30, anti_lattice},
      {3, "Stott bijection round trip", 10, stott},
      {4, "M_T family", 0, mt_family},
      {5, "commuting glb two-route equality", 0, commuting},
      {6, "positive maximal lower bound algorithm", 60, positive_mlb},
      {7, "block PSD test vs spectral", 0, albert},
      {8, "parallel sum and Ando limit", 0, parallel},
      {9, "contraction and projection glb", 0, contraction_projection},
      {10, "truncated family glb diag(1/N, 0)", 0, truncation_law},
      {11, "constrained emptiness at e1", 0, constrained_emptiness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const Error& e) {
      v.pass = false;
      v.detail = std::string("error ") + std::string(to_string(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      v.pass = false;
      v.detail += " (runtime " + fmt(secs) + " s over limit " + fmt(c.limit_s) + " s)";
    }
    std::printf("%s  %2d  %-52s %8.3f s  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, secs, v.detail.c_str());
    if (!v.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
