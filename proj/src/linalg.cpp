#include "loewner/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace loewner {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotHermitianWithinTolerance: return "NotHermitianWithinTolerance";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::TrivialSubspace: return "TrivialSubspace";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::NotCommutingFamily: return "NotCommutingFamily";
    case ErrorCode::NotLowerBound: return "NotLowerBound";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::NotMaximalForJZero: return "NotMaximalForJZero";
    case ErrorCode::InfimumExists: return "InfimumExists";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::RangeConditionViolated: return "RangeConditionViolated";
    case ErrorCode::AngularExtractionFailed: return "AngularExtractionFailed";
    case ErrorCode::DistinctnessFailure: return "DistinctnessFailure";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UsageError:
    case ErrorCode::UnknownFixture:
    case ErrorCode::UnknownSuite:
      return 1;
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::RangeConditionViolated:
    case ErrorCode::AngularExtractionFailed:
    case ErrorCode::DistinctnessFailure:
    case ErrorCode::NumericalFailure:
      return 3;
    default:
      return 2;
  }
}

void Tolerances::validate() const {
  for (double v : {rank_rel, psd_rel, eq_rel}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::InvalidTolerance, "tolerances must be finite and non-negative");
    }
  }
}

// ---------------------------------------------------------------- Hermitian

HermitianMatrix HermitianMatrix::symmetrize(const Matrix& raw) {
  if (raw.rows() != raw.cols()) {
    throw Error(ErrorCode::NonSquare, "matrix is " + std::to_string(raw.rows()) + "x" +
                                          std::to_string(raw.cols()));
  }
  const Index n = raw.rows();
  Matrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    m(j, j) = Complex(raw(j, j).real(), 0.0);
    for (Index i = j + 1; i < n; ++i) {
      const Complex v = 0.5 * (raw(i, j) + std::conj(raw(j, i)));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::identity(Index n) {
  return HermitianMatrix(Matrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(Index n) { return HermitianMatrix(Matrix::Zero(n, n)); }

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  return HermitianMatrix(d.cast<Complex>().asDiagonal());
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> d) {
  RealVector v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return diagonal(v);
}

HermitianMatrix HermitianMatrix::real(std::initializer_list<std::initializer_list<double>> rows) {
  const Index n = static_cast<Index>(rows.size());
  Matrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) {
      throw Error(ErrorCode::NonSquare, "ragged rows in real matrix literal");
    }
    Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return symmetrize(m);
}

double HermitianMatrix::norm() const {
  if (dim() == 0) return 0.0;
  const RealVector ev = eigenvalues(*this);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

HermitianMatrix HermitianMatrix::congruence(const Matrix& t) const {
  if (t.rows() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "congruence factor has wrong row count");
  }
  return symmetrize(t.adjoint() * m_ * t);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "sum of unequal dims");
  return HermitianMatrix(m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  if (o.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "difference of unequal dims");
  return HermitianMatrix(m_ - o.m_);
}

HermitianMatrix HermitianMatrix::operator-() const { return HermitianMatrix(-m_); }

HermitianMatrix HermitianMatrix::operator*(double s) const { return HermitianMatrix(m_ * s); }

HermitianMatrix hermitize(const Matrix& raw, const Tolerances& tol) {
  if (raw.rows() != raw.cols()) {
    throw Error(ErrorCode::NonSquare, "matrix is " + std::to_string(raw.rows()) + "x" +
                                          std::to_string(raw.cols()));
  }
  if (raw.rows() == 0) throw Error(ErrorCode::NonSquare, "empty matrix");
  const double defect = op_norm(raw - raw.adjoint());
  if (defect > tol.eq_rel * (1.0 + op_norm(raw))) {
    throw Error(ErrorCode::NotHermitianWithinTolerance,
                "||A - A^H|| = " + std::to_string(defect) + " exceeds tolerance");
  }
  return HermitianMatrix::symmetrize(raw);
}

// ----------------------------------------------------------------- spectral

void apply_phase_convention(Matrix& columns) {
  for (Index c = 0; c < columns.cols(); ++c) {
    auto col = columns.col(c);
    double best = 0.0;
    for (Index r = 0; r < col.size(); ++r) best = std::max(best, std::abs(col(r)));
    if (best == 0.0) continue;
    // near-equal moduli count as ties; the lowest row wins
    Index pick = 0;
    for (Index r = 0; r < col.size(); ++r) {
      if (std::abs(col(r)) >= best * (1.0 - 1e-12)) {
        pick = r;
        break;
      }
    }
    const Complex z = col(pick);
    col *= std::conj(z) / std::abs(z);
    col(pick) = Complex(std::abs(col(pick)), 0.0);
  }
}

EigDecomposition spectral(const HermitianMatrix& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.matrix(), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  EigDecomposition out{es.eigenvalues(), es.eigenvectors()};
  apply_phase_convention(out.eigenvectors);
  return out;
}

RealVector eigenvalues(const HermitianMatrix& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  return es.eigenvalues();
}

namespace {

double max_abs(const RealVector& ev) {
  return ev.size() == 0 ? 0.0 : std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

HermitianMatrix reassemble(const EigDecomposition& e, const RealVector& f) {
  const Matrix& u = e.eigenvectors;
  return HermitianMatrix::symmetrize(u * f.cast<Complex>().asDiagonal() * u.adjoint());
}

}  // namespace

HermitianMatrix matrix_function(const HermitianMatrix& s, MatrixFunction f,
                                const Tolerances& tol, double scale) {
  const EigDecomposition e = spectral(s);
  const RealVector& lam = e.eigenvalues;
  const double lmax = max_abs(lam);
  RealVector out(lam.size());
  switch (f) {
    case MatrixFunction::sqrt_psd: {
      if (lam.size() > 0 && lam(0) < -tol.psd_rel * (1.0 + lmax)) {
        throw Error(ErrorCode::NotPositiveSemidefinite,
                    "square root of a matrix with eigenvalue " + std::to_string(lam(0)));
      }
      for (Index i = 0; i < lam.size(); ++i) out(i) = std::sqrt(std::max(lam(i), 0.0));
      break;
    }
    case MatrixFunction::abs:
      out = lam.cwiseAbs();
      break;
    case MatrixFunction::pinv: {
      const double cut = tol.rank_rel * std::max(lmax, scale);
      for (Index i = 0; i < lam.size(); ++i) {
        out(i) = std::abs(lam(i)) <= cut ? 0.0 : 1.0 / lam(i);
      }
      break;
    }
  }
  return reassemble(e, out);
}

HermitianMatrix sqrt_psd(const HermitianMatrix& s, const Tolerances& tol) {
  return matrix_function(s, MatrixFunction::sqrt_psd, tol);
}

HermitianMatrix abs_value(const HermitianMatrix& s) {
  return matrix_function(s, MatrixFunction::abs, Tolerances{});
}

HermitianMatrix pinv(const HermitianMatrix& s, const Tolerances& tol, double scale) {
  return matrix_function(s, MatrixFunction::pinv, tol, scale);
}

// ---------------------------------------------------------------- subspaces

Subspace make_subspace_unchecked(Index ambient, Matrix basis) {
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::zero(Index ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::from_orthonormal(Matrix basis, const Tolerances& tol) {
  const Index k = basis.cols();
  if (k > basis.rows()) {
    throw Error(ErrorCode::ValidationError, "more basis vectors than the ambient dimension");
  }
  if (k > 0) {
    const double defect = op_norm(basis.adjoint() * basis - Matrix::Identity(k, k));
    if (defect > tol.eq_rel) {
      throw Error(ErrorCode::ValidationError, "basis columns are not orthonormal");
    }
  }
  const Index n = basis.rows();
  return Subspace(n, std::move(basis));
}

Subspace Subspace::span(const Matrix& vectors, const Tolerances& tol) {
  const Index n = vectors.rows();
  if (vectors.cols() == 0) return zero(n);
  Eigen::JacobiSVD<Matrix> svd(vectors, Eigen::ComputeThinU);
  const RealVector& sv = svd.singularValues();
  const double cut = tol.rank_rel * (sv.size() ? sv(0) : 0.0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cut && sv(r) > 0.0) ++r;
  Matrix b = svd.matrixU().leftCols(r);
  apply_phase_convention(b);
  return Subspace(n, std::move(b));
}

Matrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

Subspace Subspace::complement() const {
  const Index k = dim();
  if (k == 0) return full(ambient_);
  if (k == ambient_) return zero(ambient_);
  Eigen::HouseholderQR<Matrix> qr(basis_);
  Matrix q = qr.householderQ() * Matrix::Identity(ambient_, ambient_);
  Matrix rest = q.rightCols(ambient_ - k);
  apply_phase_convention(rest);
  return Subspace(ambient_, std::move(rest));
}

RangeNullspace range_nullspace(const HermitianMatrix& s, const Tolerances& tol, double scale) {
  const EigDecomposition e = spectral(s);
  const double cut = tol.rank_rel * std::max(max_abs(e.eigenvalues), scale);
  std::vector<Index> range_idx;
  std::vector<Index> null_idx;
  for (Index i = 0; i < e.eigenvalues.size(); ++i) {
    (std::abs(e.eigenvalues(i)) > cut ? range_idx : null_idx).push_back(i);
  }
  const Index n = s.dim();
  Matrix r(n, static_cast<Index>(range_idx.size()));
  Matrix z(n, static_cast<Index>(null_idx.size()));
  for (std::size_t c = 0; c < range_idx.size(); ++c) {
    r.col(static_cast<Index>(c)) = e.eigenvectors.col(range_idx[c]);
  }
  for (std::size_t c = 0; c < null_idx.size(); ++c) {
    z.col(static_cast<Index>(c)) = e.eigenvectors.col(null_idx[c]);
  }
  return {make_subspace_unchecked(n, std::move(r)), make_subspace_unchecked(n, std::move(z))};
}

Matrix nullspace_basis(const Matrix& a, double threshold) {
  const Index n = a.cols();
  if (a.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  Matrix z = svd.matrixV().rightCols(n - rank);
  apply_phase_convention(z);
  return z;
}

double angle_threshold_sine(const Tolerances& tol) {
  const double c = std::min(tol.rank_rel, 1.0);
  return std::sqrt(c * (2.0 - c));
}

namespace {

void check_ambient(std::span<const Subspace> subspaces) {
  if (subspaces.empty()) {
    throw Error(ErrorCode::AmbientMismatch, "no subspaces given");
  }
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != subspaces.front().ambient_dim()) {
      throw Error(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
    }
  }
}

}  // namespace

Subspace subspace_sum(std::span<const Subspace> subspaces, const Tolerances& tol) {
  check_ambient(subspaces);
  const Index n = subspaces.front().ambient_dim();
  const double cut = angle_threshold_sine(tol);
  Matrix acc(n, 0);
  for (const auto& s : subspaces) {
    if (s.dim() == 0 || acc.cols() == n) continue;
    // the part of s orthogonal to what we have; its singular values are the
    // sines of the principal angles between s and the running sum
    Matrix resid = s.basis() - acc * (acc.adjoint() * s.basis());
    Eigen::JacobiSVD<Matrix> svd(resid, Eigen::ComputeThinU);
    const RealVector& sv = svd.singularValues();
    Index k = 0;
    while (k < sv.size() && sv(k) > cut) ++k;
    if (k == 0) continue;
    Matrix grown(n, acc.cols() + k);
    grown << acc, svd.matrixU().leftCols(k);
    acc = std::move(grown);
  }
  apply_phase_convention(acc);
  return make_subspace_unchecked(n, std::move(acc));
}

Subspace subspace_intersect(std::span<const Subspace> subspaces, const Tolerances& tol) {
  check_ambient(subspaces);
  const Index n = subspaces.front().ambient_dim();
  Matrix acc = subspaces.front().basis();
  const double min_cos = 1.0 - tol.rank_rel;
  for (std::size_t i = 1; i < subspaces.size(); ++i) {
    const Matrix& other = subspaces[i].basis();
    if (acc.cols() == 0 || other.cols() == 0) {
      acc = Matrix(n, 0);
      break;
    }
    // singular values of acc^H other are the cosines of the principal angles
    Eigen::JacobiSVD<Matrix> svd(acc.adjoint() * other, Eigen::ComputeThinU);
    const RealVector& sv = svd.singularValues();
    Index k = 0;
    while (k < sv.size() && sv(k) >= min_cos) ++k;
    acc = acc * svd.matrixU().leftCols(k);
  }
  apply_phase_convention(acc);
  return make_subspace_unchecked(n, std::move(acc));
}

// -------------------------------------------------------------------- order

std::string_view to_string(Order o) {
  switch (o) {
    case Order::equal: return "equal";
    case Order::below: return "S<=T";
    case Order::above: return "T<=S";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

OrderVerdict loewner_compare(const HermitianMatrix& s, const HermitianMatrix& t,
                             const Tolerances& tol) {
  if (s.dim() != t.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot compare matrices of different dimension");
  }
  const RealVector ev = eigenvalues(t - s);
  const double nrm = max_abs(ev);
  const double slack = tol.psd_rel * (1.0 + nrm);
  const bool s_leq_t = ev(0) >= -slack;
  const bool t_leq_s = ev(ev.size() - 1) <= slack;
  Order o = Order::incomparable;
  if (s_leq_t && t_leq_s) o = Order::equal;
  else if (s_leq_t) o = Order::below;
  else if (t_leq_s) o = Order::above;
  return {s_leq_t, o};
}

bool loewner_leq(const HermitianMatrix& s, const HermitianMatrix& t, const Tolerances& tol) {
  return loewner_compare(s, t, tol).leq;
}

bool is_psd(const HermitianMatrix& s, const Tolerances& tol) {
  return loewner_leq(HermitianMatrix::zero(s.dim()), s, tol);
}

double op_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

bool commute(const HermitianMatrix& a, const HermitianMatrix& b, const Tolerances& tol) {
  const Matrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  return op_norm(c) <= tol.eq_rel * (1.0 + a.norm() * b.norm());
}

}  // namespace loewner
