#include "loewner/cli/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace loewner::cli {

namespace {

using std::numbers::pi;

// radical inverse of k in the given base, a low-discrepancy point in [0, 1)
double radical_inverse(int k, int base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (k > 0) {
    result += f * (k % base);
    k /= base;
    f /= base;
  }
  return result;
}

// projection onto the unit vector with Bloch angles (polar, azimuth)
HermitianMatrix bloch_projection(double polar, double azimuth) {
  Vector u(2);
  u << std::cos(polar / 2), std::polar(std::sin(polar / 2), azimuth);
  return HermitianMatrix::symmetrize(u * u.adjoint());
}

MatrixSet scaled_projections(int n) {
  std::vector<HermitianMatrix> members;
  for (int k = 1; k <= n; ++k) {
    RealVector d = RealVector::Zero(n);
    d(k - 1) = static_cast<double>(k) * k;
    members.push_back(HermitianMatrix::diagonal(d));
  }
  return MatrixSet(std::move(members));
}

MatrixSet halton_projections(int n) {
  // polar angle from arccos of a uniform height, so the points spread
  // evenly over the Bloch sphere
  std::vector<HermitianMatrix> members;
  for (int k = 1; k <= n; ++k) {
    const double polar = std::acos(1.0 - 2.0 * radical_inverse(k, 2));
    members.push_back(bloch_projection(polar, 2.0 * pi * radical_inverse(k, 3)));
  }
  return MatrixSet(std::move(members));
}

MatrixSet fibonacci_projections(int n) {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<HermitianMatrix> members;
  for (int k = 0; k < n; ++k) {
    const double polar = std::acos(1.0 - (2.0 * k + 1.0) / n);
    members.push_back(bloch_projection(polar, 2.0 * pi * std::fmod(k / golden, 1.0)));
  }
  return MatrixSet(std::move(members));
}

HermitianMatrix two_by_two(double a, double b, double d) {
  return HermitianMatrix::real({{a, b}, {b, d}});
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"ex3.2",  "ex3.5i", "ex3.5ii", "ex3.5iii", "ex4.3",
                                              "ex4.7",  "ex4.8i", "ex4.8ii", "ex6.2"};
  return names;
}

Fixture make_fixture(const std::string& name, int n) {
  if (n < 1) throw Error(ErrorCode::UsageError, "truncation must be at least 1");
  std::vector<HermitianMatrix> m;

  if (name == "ex3.2" || name == "ex3.5iii") {
    return {scaled_projections(n),
            "members n^2 P_n on orthonormal basis vectors, n <= " + std::to_string(n) +
                ". The full unbounded family has infimum 0, which is not a member; every "
                "finite truncation with N >= 2 has no infimum."};
  }
  if (name == "ex3.5i") {
    return {halton_projections(n),
            "rank-one projections onto the first " + std::to_string(n) +
                " points of a dense sequence on the unit sphere of C^2. The full countable "
                "family has infimum 0, which is not a member."};
  }
  if (name == "ex3.5ii") {
    return {fibonacci_projections(n),
            std::to_string(n) +
                " evenly spread rank-one projections of C^2, sampling the compact uncountable "
                "family of all of them, whose infimum is 0."};
  }
  if (name == "ex4.3") {
    for (int k = 1; k <= n; ++k) {
      const double x = k;
      m.push_back(two_by_two(1 + 1 / x, 1 / std::sqrt(x), 1 / x));
    }
    m.push_back(HermitianMatrix::diagonal({1, 0}));
    return {MatrixSet(std::move(m)),
            "greatest positive lower bound of the truncation is diag(1/N, 0) with N = " +
                std::to_string(n) +
                "; it tends to 0, the only positive lower bound of the full family."};
  }
  if (name == "ex4.7") {
    for (int k = 1; k <= n; ++k) {
      const double x = k;
      m.push_back(two_by_two(1 + 1 / (x * x), 1 / std::sqrt(x), 1 / x));
    }
    m.push_back(HermitianMatrix::diagonal({1, 0}));
    return {MatrixSet(std::move(m)),
            "at u = e1: alpha = 1, attained only by diag(1, 0); the reduced set is "
            "{1/n - n} u {0}, unbounded below for the full family, so no lower bound "
            "attains alpha at u there."};
  }
  if (name == "ex4.8i") {
    for (int k = 1; k <= n; ++k) m.push_back(two_by_two(1 + 1.0 / k, 1, 1));
    return {MatrixSet(std::move(m)),
            "at u = e1 no member attains the infimum 1 of (Au, u) for the full family, yet "
            "[[1, 1], [1, 1]] is a lower bound with (Lu, u) = 1."};
  }
  if (name == "ex4.8ii") {
    for (int k = 1; k <= n; ++k) m.push_back(two_by_two(1 + 1.0 / k, 1, 1));
    for (int k = 1; k <= n; ++k) m.push_back(two_by_two(1 + 1.0 / k, 2, 4));
    m.push_back(two_by_two(1, 1, 1));
    m.push_back(two_by_two(1, 2, 4));
    return {MatrixSet(std::move(m)),
            "both families plus their limit points [[1, 1], [1, 1]] and [[1, 2], [2, 4]]; at "
            "u = e1 both limit points attain alpha = 1 with Au != Bu, so no lower bound "
            "attains alpha at u."};
  }
  if (name == "ex6.2") {
    return {MatrixSet({HermitianMatrix::diagonal({1, 0}), two_by_two(1, 1, 2)}),
            "positive maximal lower bound diag(1/2, 0); only scalars commute with both "
            "members, so the greatest commuting lower bound is 0, which is not maximal."};
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
}

}  // namespace loewner::cli
