#include "loewner/random.hpp"

namespace loewner {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RealVector uniform_vector(Index n, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> dist(lo, hi);
  RealVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

Matrix conjugate_diagonal(const Matrix& u, const RealVector& d) {
  return u * d.cast<Complex>().asDiagonal() * u.adjoint();
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

Matrix random_gaussian(Index rows, Index cols, Rng& rng, bool complex) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = dist(rng);
      const double im = complex ? dist(rng) : 0.0;
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

Vector random_unit_vector(Index n, Rng& rng) {
  Vector v = random_gaussian(n, 1, rng);
  return v / v.norm();
}

HermitianMatrix random_hermitian(Index n, Rng& rng) {
  return HermitianMatrix::symmetrize(random_gaussian(n, n, rng));
}

HermitianMatrix random_psd(Index n, Index rank, Rng& rng) {
  const Matrix g = random_gaussian(n, rank, rng);
  return HermitianMatrix::symmetrize(g * g.adjoint());
}

Matrix random_unitary(Index n, Rng& rng) {
  const Matrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the distribution is Haar
  for (Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix random_invertible(Index n, Rng& rng, double lo, double hi) {
  const Matrix u = random_unitary(n, rng);
  const Matrix v = random_unitary(n, rng);
  const RealVector s = uniform_vector(n, lo, hi, rng);
  return u * s.cast<Complex>().asDiagonal() * v.adjoint();
}

std::vector<HermitianMatrix> random_commuting_family(Index n, std::size_t count, Rng& rng) {
  const Matrix u = random_unitary(n, rng);
  std::vector<HermitianMatrix> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(
        HermitianMatrix::symmetrize(conjugate_diagonal(u, uniform_vector(n, -2.0, 2.0, rng))));
  }
  return out;
}

HermitianMatrix random_projection(Index n, Index rank, Rng& rng) {
  const Matrix u = random_unitary(n, rng).leftCols(rank);
  return HermitianMatrix::symmetrize(u * u.adjoint());
}

HermitianMatrix random_psd_contraction(Index n, Rng& rng) {
  const Matrix u = random_unitary(n, rng);
  return HermitianMatrix::symmetrize(conjugate_diagonal(u, uniform_vector(n, 0.0, 1.0, rng)));
}

}  // namespace loewner
