#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "loewner/errors.hpp"
#include "loewner/tolerances.hpp"

namespace loewner {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense complex matrix with exact Hermitian symmetry.
///
/// Every constructor symmetrizes, so entries(i, j) == conj(entries(j, i))
/// holds bit for bit and the diagonal is real. Checked construction from
/// arbitrary input goes through `hermitize`.
class HermitianMatrix {
 public:
  /// (raw + raw^H) / 2 without any closeness check. `raw` must be square.
  static HermitianMatrix symmetrize(const Matrix& raw);
  static HermitianMatrix identity(Index n);
  static HermitianMatrix zero(Index n);
  static HermitianMatrix diagonal(const RealVector& d);
  static HermitianMatrix diagonal(std::initializer_list<double> d);
  /// Real symmetric input given row by row; symmetrized.
  static HermitianMatrix real(std::initializer_list<std::initializer_list<double>> rows);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  /// Operator (spectral) norm, i.e. the largest |eigenvalue|.
  double norm() const;

  /// T^H * S * T for a square T of matching size.
  HermitianMatrix congruence(const Matrix& t) const;

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator-() const;
  HermitianMatrix operator*(double s) const;
  friend HermitianMatrix operator*(double s, const HermitianMatrix& h) { return h * s; }

 private:
  explicit HermitianMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Checked symmetrization: rejects input farther than
/// eq_rel * (1 + ||raw||) from its adjoint.
HermitianMatrix hermitize(const Matrix& raw, const Tolerances& tol);

/// Subspace of C^n stored as a matrix with orthonormal columns.
class Subspace {
 public:
  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);
  /// Trusts nothing: checks basis^H basis = I within eq_rel.
  static Subspace from_orthonormal(Matrix basis, const Tolerances& tol);
  /// Span of arbitrary columns, orthonormalized with a rank-revealing SVD.
  static Subspace span(const Matrix& vectors, const Tolerances& tol);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  /// Orthogonal projection onto the subspace.
  Matrix projector() const;
  /// Orthogonal complement, basis from a Householder QR with the phase
  /// convention applied column by column.
  Subspace complement() const;

 private:
  Subspace(Index ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  friend Subspace make_subspace_unchecked(Index, Matrix);
  Index ambient_;
  Matrix basis_;
};

/// Internal constructor for bases that are orthonormal by construction.
Subspace make_subspace_unchecked(Index ambient, Matrix basis);

struct EigDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, columns phase-normalized
};

/// Hermitian eigendecomposition. Eigenvalues ascending; in every eigenvector
/// the entry of largest modulus is made real positive (lowest row on ties).
EigDecomposition spectral(const HermitianMatrix& s);

/// Eigenvalues only, ascending.
RealVector eigenvalues(const HermitianMatrix& s);

/// Rescales each column by a unit phase so its largest-modulus entry is
/// real and positive.
void apply_phase_convention(Matrix& columns);

enum class MatrixFunction { sqrt_psd, abs, pinv };

/// Applies `f` to the spectrum.
///
/// For `pinv`, eigenvalues with |lambda| <= rank_rel * max(max|lambda|, scale)
/// are sent to zero. `scale` lets a caller anchor the rank decision to a
/// larger reference matrix (e.g. the full matrix a block was cut from);
/// zero means the matrix itself. For `sqrt_psd` the input must be PSD
/// within psd_rel; slightly negative eigenvalues are clamped.
HermitianMatrix matrix_function(const HermitianMatrix& s, MatrixFunction f,
                                const Tolerances& tol, double scale = 0.0);

HermitianMatrix sqrt_psd(const HermitianMatrix& s, const Tolerances& tol);
HermitianMatrix abs_value(const HermitianMatrix& s);
HermitianMatrix pinv(const HermitianMatrix& s, const Tolerances& tol, double scale = 0.0);

struct RangeNullspace {
  Subspace range;
  Subspace nullspace;
};

/// Splits eigenvectors at |lambda| > rank_rel * max(max|lambda|, scale).
RangeNullspace range_nullspace(const HermitianMatrix& s, const Tolerances& tol,
                               double scale = 0.0);

/// Orthonormal basis of the right null space of an arbitrary matrix:
/// right singular vectors with sigma <= threshold.
Matrix nullspace_basis(const Matrix& a, double threshold);

/// Sine of the largest principal angle still treated as "the same
/// direction". Shared by subspace_sum and subspace_intersect so that
/// dim(U + V) + dim(U n V) = dim U + dim V holds at tolerance.
double angle_threshold_sine(const Tolerances& tol);

Subspace subspace_sum(std::span<const Subspace> subspaces, const Tolerances& tol);
Subspace subspace_intersect(std::span<const Subspace> subspaces, const Tolerances& tol);

enum class Order { equal, below, above, incomparable };

std::string_view to_string(Order o);

struct OrderVerdict {
  bool leq;     // S <= T
  Order order;  // below means S <= T strictly, above means T <= S strictly
};

/// Loewner comparison of S and T: S <= T iff the smallest eigenvalue of
/// T - S is >= -psd_rel * (1 + ||T - S||).
OrderVerdict loewner_compare(const HermitianMatrix& s, const HermitianMatrix& t,
                             const Tolerances& tol);
bool loewner_leq(const HermitianMatrix& s, const HermitianMatrix& t, const Tolerances& tol);
bool is_psd(const HermitianMatrix& s, const Tolerances& tol);

/// Largest singular value.
double op_norm(const Matrix& a);

/// ||AB - BA|| <= eq_rel * (1 + ||A|| ||B||).
bool commute(const HermitianMatrix& a, const HermitianMatrix& b, const Tolerances& tol);

}  // namespace loewner
