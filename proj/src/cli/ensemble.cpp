#include "loewner/cli/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <thread>

#include "loewner/bounds.hpp"
#include "loewner/infimum.hpp"
#include "loewner/parallel.hpp"
#include "loewner/random.hpp"
#include "loewner/schur.hpp"
#include "loewner/stott.hpp"

namespace loewner::cli {

namespace {

struct Metric {
  const char* name;
  bool take_max;  // worst case is the largest value (else the smallest)
};

struct Outcome {
  bool pass = true;
  std::vector<double> values;  // one per suite metric
  std::string failure;

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }
};

using TrialFn = Outcome (*)(Rng&, Index, const Tolerances&);

struct Suite {
  const char* name;
  const char* property;
  std::vector<Metric> metrics;
  TrialFn run;
};

double dist(const HermitianMatrix& a, const HermitianMatrix& b) { return op_norm(a.matrix() - b.matrix()); }

Index uniform_index(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

HermitianMatrix unitary_conjugate(const Matrix& u, const RealVector& d) {
  return HermitianMatrix::symmetrize(u * d.cast<Complex>().asDiagonal() * u.adjoint());
}

Outcome anti_lattice(Rng& rng, Index n, const Tolerances& tol) {
  n = std::max<Index>(n, 2);
  const HermitianMatrix a = random_hermitian(n, rng);
  HermitianMatrix b = random_hermitian(n, rng);
  for (int k = 0; k < 100 && loewner_compare(a, b, tol).order != Order::incomparable; ++k) {
    b = random_hermitian(n, rng);
  }
  const MatrixSet set({a, b});
  Outcome o;
  if (finite_infimum(set, tol).exists) o.fail("infimum reported for an incomparable pair");
  const auto maxima = distinct_maximals(set, 3, tol, rng());
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    if (!certify_maximal(maxima[i], set, tol).is_maximal) o.fail("uncertified maximal bound");
    for (std::size_t j = i + 1; j < maxima.size(); ++j) {
      sep = std::min(sep, dist(maxima[i], maxima[j]) / set.scale());
    }
  }
  if (!(sep > 1e-6)) o.fail("maximal bounds not separated");
  o.values = {sep};
  return o;
}

Outcome stott_roundtrip(Rng& rng, Index, const Tolerances& tol) {
  const Index p = uniform_index(rng, 1, 4);
  const Index q = uniform_index(rng, 1, 4);
  const Matrix x = random_gaussian(p, q, rng);
  const StottPair pair = stott_mx({p, q, x}, tol);
  const StottParam back = stott_recover_x(pair.mx, p, q, tol);
  const double err = op_norm(x - back.x);
  const MatrixSet jzero({signature_matrix(p, q), HermitianMatrix::zero(p + q)});
  Outcome o;
  if (!certify_maximal(pair.mx, jzero, tol).is_maximal) o.fail("M(X) not certified maximal");
  if (!(err <= 1e-8)) o.fail("round trip error above 1e-8");
  o.values = {err};
  return o;
}

Outcome albert_vs_spectral(Rng& rng, Index n, const Tolerances& tol) {
  n = std::max<Index>(n, 2);
  HermitianMatrix s = HermitianMatrix::zero(n);
  switch (rng() % 4) {
    case 0: s = random_psd(n, n, rng); break;
    case 1: s = random_psd(n, uniform_index(rng, 1, n - 1), rng); break;
    case 2: s = random_hermitian(n, rng); break;
    default: {
      // PSD except along one direction, by a small margin
      const Vector v = random_unit_vector(n, rng);
      s = random_psd(n, uniform_index(rng, 1, n), rng) -
          HermitianMatrix::symmetrize(v * v.adjoint()) * 1e-3;
    }
  }
  const Subspace h1 = Subspace::span(random_gaussian(n, uniform_index(rng, 1, n - 1), rng), tol);
  const bool albert = albert_is_psd(s, h1, tol).psd;
  const bool spectral = is_psd(s, tol);
  Outcome o;
  if (albert != spectral) o.fail("block test and spectral test disagree");
  o.values = {albert == spectral ? 0.0 : 1.0};
  return o;
}

Outcome mt_family(Rng& rng, Index n, const Tolerances& tol) {
  const HermitianMatrix a = random_hermitian(n, rng);
  const HermitianMatrix b = random_hermitian(n, rng);
  const Matrix t = random_invertible(n, rng);
  const Matrix s = random_invertible(n, rng);
  const MatrixSet set({a, b});
  const HermitianMatrix m = mlb_mt(a, b, t, tol);
  Outcome o;
  if (!is_lower_bound(m, set, tol)) o.fail("M_T is not a lower bound");
  if (!certify_maximal(m, set, tol).is_maximal) o.fail("M_T not certified maximal");

  const HermitianMatrix moved = m.congruence(s);
  const double equivariance =
      dist(mlb_mt(a.congruence(s), b.congruence(s), t * s, tol), moved) / (1 + moved.norm());
  const HermitianMatrix abs_t =
      sqrt_psd(HermitianMatrix::symmetrize(t.adjoint() * t), tol);
  const double polar = dist(mlb_mt(a, b, abs_t.matrix(), tol), m) / (1 + m.norm());
  if (!(equivariance <= 1e-8)) o.fail("congruence equivariance residual above 1e-8");
  if (!(polar <= 1e-8)) o.fail("polar collapse residual above 1e-8");
  o.values = {equivariance, polar};
  return o;
}

Outcome commuting_two_route(Rng& rng, Index n, const Tolerances& tol) {
  const std::size_t count = static_cast<std::size_t>(uniform_index(rng, 2, 5));
  const bool degenerate = rng() % 2 == 0;
  const Matrix u = random_unitary(n, rng);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::vector<RealVector> diags;
  std::vector<HermitianMatrix> members;
  for (std::size_t j = 0; j < count; ++j) {
    RealVector d(n);
    for (Index i = 0; i < n; ++i) {
      d(i) = entry(rng);
      if (degenerate) d(i) = std::round(2 * d(i)) / 2;
    }
    diags.push_back(d);
    members.push_back(unitary_conjugate(u, d));
  }
  const MatrixSet set(members);
  const double scale = std::max(1.0, set.scale());
  const HermitianMatrix g = commuting_glb(set, tol);
  const double routes =
      dist(commuting_glb_recursive(set, tol), commuting_glb_diagonal(set, tol)) / (1 + set.scale());
  double commutator = 0.0;
  for (const auto& a : set) {
    commutator = std::max(commutator, op_norm(g.matrix() * a.matrix() - a.matrix() * g.matrix()) / scale);
  }
  Outcome o;
  if (!(routes <= 1e-10)) o.fail("recursion and diagonalization disagree");
  if (!(commutator <= 1e-9)) o.fail("output does not commute with the family");
  if (!is_lower_bound(g, set, tol)) o.fail("output is not a lower bound");

  // joint eigenspaces: coordinates with identical eigenvalue tuples
  RealVector dmin = diags[0];
  for (const auto& d : diags) dmin = dmin.cwiseMin(d);
  std::map<std::vector<double>, std::vector<Index>> blocks;
  for (Index i = 0; i < n; ++i) {
    std::vector<double> key;
    for (const auto& d : diags) key.push_back(d(i));
    blocks[key].push_back(i);
  }
  // commuting lower bounds U (Dmin - Q) U^H, with Q >= 0 block diagonal
  std::uniform_real_distribution<double> size(0.0, 1.0);
  for (int c = 0; c < 50; ++c) {
    Matrix q = Matrix::Zero(n, n);
    for (const auto& [key, idx] : blocks) {
      const Index k = static_cast<Index>(idx.size());
      const Matrix gq = random_gaussian(k, k, rng) * size(rng);
      const Matrix block = gq * gq.adjoint();
      for (Index r = 0; r < k; ++r) {
        for (Index s = 0; s < k; ++s) q(idx[r], idx[s]) = block(r, s);
      }
    }
    const HermitianMatrix cand = HermitianMatrix::symmetrize(
        u * (Matrix(dmin.cast<Complex>().asDiagonal()) - q) * u.adjoint());
    if (!loewner_leq(cand, g, tol)) {
      o.fail("a commuting lower bound is not dominated");
      break;
    }
  }
  o.values = {routes, commutator};
  return o;
}

Outcome positive_mlb(Rng& rng, Index n, const Tolerances& tol) {
  const std::size_t count = static_cast<std::size_t>(uniform_index(rng, 2, 4));
  std::vector<HermitianMatrix> members;
  for (std::size_t j = 0; j < count; ++j) members.push_back(random_psd(n, uniform_index(rng, 1, n), rng));
  const MatrixSet set(members);
  const HermitianMatrix m = positive_maximal_lb(set, tol);
  const double lmin = eigenvalues(m)(0) / set.scale();
  Outcome o;
  if (!(lmin >= -1e-9)) o.fail("output is not PSD");
  if (!is_lower_bound(m, set, tol)) o.fail("output is not a lower bound");
  if (!certify_maximal(m, set, tol).is_maximal) o.fail("output not certified maximal");
  // brute force: no rank-one bump of M stays a lower bound
  const double steps[] = {1e-3, 1e-2, 1e-1};
  for (int k = 0; k < 1000 && o.pass; ++k) {
    const Vector v = random_unit_vector(n, rng);
    const HermitianMatrix bump =
        HermitianMatrix::symmetrize(v * v.adjoint()) * (steps[k % 3] * (1 + set.scale()));
    if (is_lower_bound(m + bump, set, tol)) o.fail("a strictly larger lower bound was found");
  }
  o.values = {lmin};
  return o;
}

Outcome parallel_ando(Rng& rng, Index n, const Tolerances& tol) {
  const Index ra = uniform_index(rng, 1, n);
  const Index rb = uniform_index(rng, 1, n);
  const Index shared = uniform_index(rng, 0, std::min(ra, rb));
  const Matrix common = random_gaussian(n, shared, rng);
  Matrix ga(n, ra);
  Matrix gb(n, rb);
  ga << common, random_gaussian(n, ra - shared, rng);
  gb << common, random_gaussian(n, rb - shared, rng);
  const HermitianMatrix a = HermitianMatrix::symmetrize(ga * ga.adjoint());
  const HermitianMatrix b = HermitianMatrix::symmetrize(gb * gb.adjoint());
  const double scale = std::max(a.norm(), b.norm());

  const HermitianMatrix ab = parallel_sum(a, b, tol);
  const std::vector<Subspace> ranges{range_nullspace(a, tol).range, range_nullspace(b, tol).range};
  Outcome o;
  if (range_nullspace(ab, tol, scale).range.dim() != subspace_intersect(ranges, tol).dim()) {
    o.fail("rank of A:B differs from dim(range A n range B)");
  }
  const double identity = dist(ando_limit(ab, b, tol, scale), ando_limit(a, b, tol)) / (1 + scale);
  if (!(identity <= 1e-9)) o.fail("[A:B]B differs from [A]B");

  const MatrixSet pair({a, b});
  const TwoOpGlbResult two = two_op_positive_glb(a, b, tol);
  const PositiveGlbReport family = positive_glb_family(pair, tol);
  double routes = 0.0;
  if (two.exists != family.exists) {
    o.fail("two-operator and family routes disagree on existence");
  } else if (two.exists) {
    routes = dist(*two.glb, *family.glb) / (1 + scale);
    if (!(routes <= 1e-9)) o.fail("two-operator and family routes disagree");
  }
  o.values = {identity, routes};
  return o;
}

Outcome shorted_contraction(Rng& rng, Index n, const Tolerances& tol) {
  n = std::max<Index>(n, 2);
  const HermitianMatrix a = random_psd_contraction(n, rng);
  const HermitianMatrix p = random_projection(n, uniform_index(rng, 1, n - 1), rng);
  const PositiveGlbReport r = positive_glb_family(MatrixSet({a, p}), tol);
  Outcome o;
  double diff = 0.0;
  if (!r.exists) {
    o.fail("no greatest positive lower bound reported");
  } else {
    const HermitianMatrix shorted =
        schur_complement(a, range_nullspace(p, tol).nullspace, tol).shorted;
    diff = dist(*r.glb, shorted);
    if (!(diff <= 1e-9)) o.fail("glb differs from the shorted operator");
  }
  o.values = {diff};
  return o;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"anti-lattice",
       "incomparable Hermitian pairs have no infimum and three distinct certified maximal lower bounds",
       {{"min_separation_over_scale", false}},
       anti_lattice},
      {"stott-roundtrip",
       "X -> M(X) -> X reproduces X within 1e-8 and M(X) is certified maximal for {J, 0}",
       {{"max_roundtrip_error", true}},
       stott_roundtrip},
      {"albert-vs-spectral",
       "the three-condition block test agrees with the spectral PSD test",
       {{"max_disagreement", true}},
       albert_vs_spectral},
      {"mt-family",
       "M_T is a certified maximal lower bound, congruence-equivariant and equal to M_|T|",
       {{"max_equivariance_residual", true}, {"max_polar_residual", true}},
       mt_family},
      {"commuting-two-route",
       "recursive and simultaneous-diagonalization glbs agree, commute, and dominate commuting lower bounds",
       {{"max_route_difference", true}, {"max_commutator_over_scale", true}},
       commuting_two_route},
      {"positive-mlb",
       "the positive maximal lower bound is PSD, certified, and survives 1000 rank-one bumps",
       {{"min_lambda_min_over_scale", false}},
       positive_mlb},
      {"parallel-ando",
       "rank(A:B) = dim(range A n range B), [A:B]B = [A]B, two-operator and family glb routes agree",
       {{"max_ando_identity_residual", true}, {"max_route_difference", true}},
       parallel_ando},
      {"shorted-contraction",
       "for a contraction A and projection P the glb of {A, P} is the shorted operator of A onto range P",
       {{"max_shorted_difference", true}},
       shorted_contraction},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

std::pair<Index, Index> parse_dims(const std::string& text) {
  const auto bad = [&] { return Error(ErrorCode::UsageError, "--dims expects 'a-b' or 'a', got '" + text + "'"); };
  const auto to_index = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4) throw bad();
    return static_cast<Index>(std::stol(s));
  };
  const auto dash = text.find('-');
  const Index lo = to_index(text.substr(0, dash));
  const Index hi = dash == std::string::npos ? lo : to_index(text.substr(dash + 1));
  if (lo < 1 || hi < lo) throw bad();
  return {lo, hi};
}

Report run_ensemble(const EnsembleOptions& opt, const Tolerances& tol) {
  const auto it = std::find_if(suites().begin(), suites().end(),
                               [&](const Suite& s) { return opt.suite == s.name; });
  if (it == suites().end()) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + opt.suite + "'");
  if (opt.trials < 1) throw Error(ErrorCode::UsageError, "--trials must be at least 1");
  if (opt.dim_lo < 1 || opt.dim_hi < opt.dim_lo) throw Error(ErrorCode::UsageError, "bad --dims range");
  if (opt.threads < 1) throw Error(ErrorCode::UsageError, "--threads must be at least 1");
  const Suite& suite = *it;

  const auto trials = static_cast<std::size_t>(opt.trials);
  std::vector<Outcome> outcomes(trials);
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < trials; k += stride) {
      Rng rng = make_rng(opt.seed, k);
      const Index n = uniform_index(rng, opt.dim_lo, opt.dim_hi);
      try {
        outcomes[k] = suite.run(rng, n, tol);
      } catch (const Error& e) {
        outcomes[k].fail(std::string(to_string(e.code())) + ": " + e.what());
      }
    }
  };
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(opt.threads), trials);
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }

  std::size_t passed = 0;
  std::optional<std::size_t> first_failure;
  std::vector<std::optional<double>> worst(suite.metrics.size());
  for (std::size_t k = 0; k < trials; ++k) {
    const Outcome& o = outcomes[k];
    if (o.pass) {
      ++passed;
    } else if (!first_failure) {
      first_failure = k;
    }
    for (std::size_t m = 0; m < o.values.size() && m < worst.size(); ++m) {
      const double v = o.values[m];
      if (!worst[m]) {
        worst[m] = v;
      } else {
        worst[m] = suite.metrics[m].take_max ? std::max(*worst[m], v) : std::min(*worst[m], v);
      }
    }
  }

  Report r;
  r.command = "ensemble";
  r.result["suite"] = suite.name;
  r.result["property"] = suite.property;
  r.result["trials"] = opt.trials;
  r.result["dims"] = {opt.dim_lo, opt.dim_hi};
  r.result["passed"] = passed;
  r.result["failed"] = trials - passed;
  Json metrics = Json::object();
  for (std::size_t m = 0; m < worst.size(); ++m) {
    metrics[suite.metrics[m].name] = worst[m] ? Json(*worst[m]) : Json(nullptr);
  }
  r.result["worst"] = metrics;
  if (first_failure) {
    r.result["first_failure"] = {{"trial", *first_failure}, {"reason", outcomes[*first_failure].failure}};
  } else {
    r.result["first_failure"] = nullptr;
  }

  r.line("suite: " + std::string(suite.name) + " (dims " + std::to_string(opt.dim_lo) + "-" +
         std::to_string(opt.dim_hi) + ")");
  r.line("property: " + std::string(suite.property));
  r.line("passed: " + std::to_string(passed) + "/" + std::to_string(trials));
  for (std::size_t m = 0; m < worst.size(); ++m) {
    r.line(std::string("worst ") + suite.metrics[m].name + ": " +
           (worst[m] ? format_number(*worst[m]) : std::string("n/a")));
  }
  if (first_failure) {
    r.line("first failure: trial " + std::to_string(*first_failure) + ": " +
           outcomes[*first_failure].failure);
  }
  r.exit_code = passed == trials ? 0 : 3;
  return r;
}

}  // namespace loewner::cli
