#include <cmath>
#include <vector>

#include "loewner/random.hpp"
#include "support.hpp"

using namespace loewner;
using loewner::test::defaults;
using loewner::test::dist;

namespace {

const Complex I_(0.0, 1.0);

}  // namespace

TEST_CASE("hermitize accepts Hermitian input and symmetrizes small defects") {
  const Tolerances tol = defaults();
  Matrix a(2, 2);
  a << 1, 2, 2, 3;
  CHECK(dist(hermitize(a, tol).matrix(), a) == 0.0);

  Matrix b(2, 2);
  b << 0, I_, -I_, 0;
  CHECK(dist(hermitize(b, tol).matrix(), b) == 0.0);

  Matrix c(2, 2);
  c << 1, 1e-14, 0, 1;
  const HermitianMatrix h = hermitize(c, tol);
  CHECK(h(0, 1).real() == doctest::Approx(5e-15).epsilon(1e-12));
  CHECK(h(1, 0).real() == doctest::Approx(5e-15).epsilon(1e-12));
  CHECK(h(0, 0).real() == 1.0);
}

TEST_CASE("hermitize rejects non-square and clearly non-Hermitian input") {
  const Tolerances tol = defaults();
  Matrix ns(2, 3);
  ns.setZero();
  try {
    hermitize(ns, tol);
    FAIL("expected NonSquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonSquare);
  }
  Matrix skew(2, 2);
  skew << 0, 1, 0, 0;
  try {
    hermitize(skew, tol);
    FAIL("expected NotHermitianWithinTolerance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitianWithinTolerance);
  }
}

TEST_CASE("symmetrize yields exact conjugate symmetry and a real diagonal") {
  Rng rng = make_rng(11);
  const Matrix raw = random_gaussian(5, 5, rng);
  const HermitianMatrix h = HermitianMatrix::symmetrize(raw);
  for (Index i = 0; i < 5; ++i) {
    CHECK(h(i, i).imag() == 0.0);
    for (Index j = 0; j < 5; ++j) CHECK(h(i, j) == std::conj(h(j, i)));
  }
}

TEST_CASE("spectral examples") {
  const RealVector a = spectral(HermitianMatrix::diagonal({3, 1})).eigenvalues;
  CHECK(a(0) == doctest::Approx(1));
  CHECK(a(1) == doctest::Approx(3));
  const RealVector b = spectral(HermitianMatrix::real({{0, 1}, {1, 0}})).eigenvalues;
  CHECK(b(0) == doctest::Approx(-1));
  CHECK(b(1) == doctest::Approx(1));
  // characteristic polynomial of [[2,1],[1,2]]: (2 - x)^2 - 1
  const RealVector c = spectral(HermitianMatrix::real({{2, 1}, {1, 2}})).eigenvalues;
  CHECK(c(0) == doctest::Approx(1));
  CHECK(c(1) == doctest::Approx(3));
}

TEST_CASE("spectral reconstruction and phase convention on random input") {
  Rng rng = make_rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianMatrix s = random_hermitian(1 + trial % 6, rng);
    const EigDecomposition e = spectral(s);
    const Matrix back =
        e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
    const double top = e.eigenvalues.cwiseAbs().maxCoeff();
    CHECK(dist(back, s.matrix()) <= 1e-8 * (1 + top));
    for (Index i = 1; i < e.eigenvalues.size(); ++i) {
      CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));
    }
    for (Index c = 0; c < e.eigenvectors.cols(); ++c) {
      Index best = 0;
      e.eigenvectors.col(c).cwiseAbs().maxCoeff(&best);
      const Complex lead = e.eigenvectors(best, c);
      CHECK(lead.real() > 0.0);
      CHECK(std::abs(lead.imag()) <= 1e-14);
    }
  }
}

TEST_CASE("phase convention breaks modulus ties toward the lowest row") {
  Matrix v(2, 1);
  v << Complex(0, 1) / std::sqrt(2.0), Complex(-1, 0) / std::sqrt(2.0);
  apply_phase_convention(v);
  CHECK(v(0, 0).real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(std::abs(v(0, 0).imag()) < 1e-15);
}

TEST_CASE("matrix function examples") {
  const Tolerances tol = defaults();
  CHECK(dist(pinv(HermitianMatrix::diagonal({2, 0}), tol), HermitianMatrix::diagonal({0.5, 0})) <
        1e-15);
  CHECK(dist(abs_value(HermitianMatrix::diagonal({2, -2})), HermitianMatrix::diagonal({2, 2})) <
        1e-15);
  const HermitianMatrix s = HermitianMatrix::real({{2, 1}, {1, 2}});
  const HermitianMatrix r = sqrt_psd(s, tol);
  CHECK(dist(r.matrix() * r.matrix(), s.matrix()) < 1e-12);
  // eigenvalues of the root are 1 and sqrt(3)
  const RealVector ev = eigenvalues(r);
  CHECK(ev(0) == doctest::Approx(1.0));
  CHECK(ev(1) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("sqrt_psd rejects indefinite input and clamps tiny negatives") {
  const Tolerances tol = defaults();
  try {
    sqrt_psd(HermitianMatrix::diagonal({1, -1}), tol);
    FAIL("expected NotPositiveSemidefinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveSemidefinite);
  }
  const HermitianMatrix r = sqrt_psd(HermitianMatrix::diagonal({1, -1e-13}), tol);
  CHECK(r(1, 1).real() == 0.0);
}

TEST_CASE("matrix function invariants on random input") {
  const Tolerances tol = defaults();
  Rng rng = make_rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 2 + trial % 5;
    const HermitianMatrix psd = random_psd(n, 1 + trial % n, rng);
    const HermitianMatrix r = sqrt_psd(psd, tol);
    CHECK(dist(r.matrix() * r.matrix(), psd.matrix()) <= 1e-10 * (1 + psd.norm()));

    const HermitianMatrix h = random_hermitian(n, rng);
    const HermitianMatrix a = abs_value(h);
    CHECK(dist(a.matrix() * a.matrix(), h.matrix() * h.matrix()) <= 1e-10 * (1 + h.norm() * h.norm()));

    // rank-deficient Hermitian: G D G^H with a zero in D
    const Matrix g = random_unitary(n, rng);
    RealVector d = RealVector::Random(n);
    d(0) = 0.0;
    const HermitianMatrix s =
        HermitianMatrix::symmetrize(g * d.cast<Complex>().asDiagonal() * g.adjoint());
    const Matrix x = pinv(s, tol).matrix();
    const Matrix& m = s.matrix();
    const double bound = 1e-9 * (1 + s.norm() + op_norm(x));
    CHECK(dist(m * x * m, m) <= bound);
    CHECK(dist(x * m * x, x) <= bound);
    CHECK(dist((m * x).adjoint(), m * x) <= bound);
    CHECK(dist((x * m).adjoint(), x * m) <= bound);
  }
}

TEST_CASE("range and null space examples") {
  const Tolerances tol = defaults();
  const RangeNullspace a = range_nullspace(HermitianMatrix::diagonal({1, 0}), tol);
  REQUIRE(a.range.dim() == 1);
  REQUIRE(a.nullspace.dim() == 1);
  CHECK(std::abs(a.range.basis()(0, 0)) == doctest::Approx(1));
  CHECK(std::abs(a.nullspace.basis()(1, 0)) == doctest::Approx(1));

  const RangeNullspace z = range_nullspace(HermitianMatrix::zero(3), tol);
  CHECK(z.range.dim() == 0);
  CHECK(z.nullspace.dim() == 3);

  const RangeNullspace o = range_nullspace(HermitianMatrix::real({{1, 1}, {1, 1}}), tol);
  REQUIRE(o.range.dim() == 1);
  const double h = 1 / std::sqrt(2.0);
  CHECK(o.range.basis()(0, 0).real() == doctest::Approx(h));
  CHECK(o.range.basis()(1, 0).real() == doctest::Approx(h));
  CHECK(std::abs(o.nullspace.basis()(0, 0) + o.nullspace.basis()(1, 0)) < 1e-14);
}

TEST_CASE("range plus null space dimension equals ambient dimension") {
  const Tolerances tol = defaults();
  Rng rng = make_rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + trial % 6;
    const HermitianMatrix s = random_psd(n, trial % (n + 1), rng);
    const RangeNullspace rn = range_nullspace(s, tol);
    CHECK(rn.range.dim() + rn.nullspace.dim() == n);
    CHECK(rn.range.dim() == std::min<Index>(trial % (n + 1), n));
  }
}

TEST_CASE("subspace sum examples") {
  const Tolerances tol = defaults();
  const Vector e1 = test::basis_vector(2, 0);
  const Vector e2 = test::basis_vector(2, 1);
  std::vector<Subspace> a{test::span_of(e1), test::span_of(e2)};
  CHECK(subspace_sum(a, tol).dim() == 2);
  std::vector<Subspace> b{test::span_of(e1), test::span_of(e1)};
  CHECK(subspace_sum(b, tol).dim() == 1);
  std::vector<Subspace> c{test::span_of(e1), test::span_of((e1 + e2) / std::sqrt(2.0))};
  CHECK(subspace_sum(c, tol).dim() == 2);
}

TEST_CASE("subspace intersection examples") {
  const Tolerances tol = defaults();
  Matrix e12 = Matrix::Identity(3, 3).leftCols(2);
  Matrix e23 = Matrix::Identity(3, 3).rightCols(2);
  std::vector<Subspace> a{test::span_of(e12), test::span_of(e23)};
  const Subspace meet = subspace_intersect(a, tol);
  REQUIRE(meet.dim() == 1);
  CHECK(std::abs(meet.basis()(1, 0)) == doctest::Approx(1));

  std::vector<Subspace> b{test::span_of(test::basis_vector(2, 0)),
                          test::span_of(test::basis_vector(2, 1))};
  CHECK(subspace_intersect(b, tol).dim() == 0);

  Rng rng = make_rng(15);
  const Matrix u = random_gaussian(3, 2, rng);
  const Matrix v = random_gaussian(3, 2, rng);
  std::vector<Subspace> c{test::span_of(u), test::span_of(v)};
  const Subspace w = subspace_intersect(c, tol);
  REQUIRE(w.dim() == 1);
  // residual oracle: the direction lies in both spans
  for (const Matrix* m : {&u, &v}) {
    const Subspace s = test::span_of(*m);
    CHECK((w.basis() - s.projector() * w.basis()).norm() < 1e-10);
  }
}

TEST_CASE("subspace operations reject mismatched ambient spaces") {
  const Tolerances tol = defaults();
  std::vector<Subspace> mixed{Subspace::full(2), Subspace::full(3)};
  try {
    subspace_sum(mixed, tol);
    FAIL("expected AmbientMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbientMismatch);
  }
  try {
    subspace_intersect(mixed, tol);
    FAIL("expected AmbientMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbientMismatch);
  }
}

TEST_CASE("dim(U + V) + dim(U n V) = dim U + dim V on random subspaces") {
  const Tolerances tol = defaults();
  Rng rng = make_rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + trial % 5;
    std::uniform_int_distribution<Index> pick(0, n);
    const Index du = pick(rng);
    const Index dv = pick(rng);
    // share some directions on purpose so intersections are not always generic
    const Index shared = std::min({du, dv, static_cast<Index>(trial % 2)});
    const Matrix common = random_gaussian(n, shared, rng);
    Matrix mu(n, du);
    Matrix mv(n, dv);
    mu << common, random_gaussian(n, du - shared, rng);
    mv << common, random_gaussian(n, dv - shared, rng);
    std::vector<Subspace> uv{test::span_of(mu), test::span_of(mv)};
    const Index sum = subspace_sum(uv, tol).dim();
    const Index meet = subspace_intersect(uv, tol).dim();
    CHECK(sum + meet == uv[0].dim() + uv[1].dim());
  }
}

TEST_CASE("Loewner comparison examples") {
  const Tolerances tol = defaults();
  CHECK(loewner_compare(HermitianMatrix::diagonal({1, 1}), HermitianMatrix::diagonal({2, 2}), tol)
            .order == Order::below);
  const OrderVerdict v =
      loewner_compare(HermitianMatrix::diagonal({1, 2}), HermitianMatrix::diagonal({2, 1}), tol);
  CHECK(v.order == Order::incomparable);
  CHECK_FALSE(v.leq);
  CHECK(loewner_leq(HermitianMatrix::diagonal({0.5, 0}), HermitianMatrix::real({{1, 1}, {1, 2}}),
                    tol));
  CHECK(loewner_compare(HermitianMatrix::identity(2), HermitianMatrix::identity(2), tol).order ==
        Order::equal);
  try {
    loewner_leq(HermitianMatrix::identity(2), HermitianMatrix::identity(3), tol);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("Loewner order is reflexive, antisymmetric and transitive at tolerance") {
  const Tolerances tol = defaults();
  Rng rng = make_rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + trial % 4;
    const HermitianMatrix a = random_hermitian(n, rng);
    const HermitianMatrix b = a + random_psd(n, 1 + trial % n, rng);
    const HermitianMatrix c = b + random_psd(n, 1, rng);
    CHECK(loewner_leq(a, a, tol));
    CHECK(loewner_leq(a, b, tol));
    CHECK(loewner_leq(b, c, tol));
    CHECK(loewner_leq(a, c, tol));
    CHECK_FALSE(loewner_leq(c, a, tol));
    // agreement with an independent Cholesky-based test
    CHECK(test::cholesky_psd(c - a, 1e-12 * (1 + (c - a).norm())));
  }
}

TEST_CASE("tolerances validate") {
  Tolerances t;
  CHECK_NOTHROW(t.validate());
  t.psd_rel = -1.0;
  CHECK_THROWS_AS(t.validate(), Error);
  t.psd_rel = std::nan("");
  CHECK_THROWS_AS(t.validate(), Error);
}
