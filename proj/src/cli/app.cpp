#include "loewner/cli/app.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "loewner/bounds.hpp"
#include "loewner/cli/document.hpp"
#include "loewner/cli/ensemble.hpp"
#include "loewner/cli/fixtures.hpp"
#include "loewner/cli/report.hpp"
#include "loewner/infimum.hpp"
#include "loewner/parallel.hpp"
#include "loewner/random.hpp"
#include "loewner/stott.hpp"

namespace loewner::cli {

namespace {

struct Context {
  Tolerances tol;
  std::uint64_t seed = 0;
  std::string digest_input;

  void feed(std::string_view s) {
    digest_input.append(s);
    digest_input.push_back('\0');
  }
};

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

MatrixSet load_set(Context& ctx, const std::string& path) {
  const Document doc = parse_document(read_input(path), source_name(path));
  ctx.feed(emit_document(doc));
  return to_matrix_set(doc, ctx.tol);
}

// Single-matrix document; Hermitian unless `raw`.
Matrix load_single(Context& ctx, const std::string& path, Index dim, const char* what) {
  const Document doc = parse_document(read_input(path), source_name(path));
  if (doc.matrices.size() != 1) {
    throw Error(ErrorCode::ValidationError,
                std::string(what) + ": expected a document holding exactly one matrix");
  }
  if (doc.dim != dim) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has dim " +
                                                  std::to_string(doc.dim) + ", the set has dim " +
                                                  std::to_string(dim));
  }
  ctx.feed(emit_document(doc));
  return doc.matrices.front();
}

HermitianMatrix load_bound(Context& ctx, const std::string& path, Index dim) {
  const Matrix raw = load_single(ctx, path, dim, "--bound");
  try {
    return hermitize(raw, ctx.tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string("--bound: ") + e.what());
  }
}

Complex json_entry(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(ErrorCode::ParseError, path + ": expected a number or an [re, im] pair");
}

Json parse_inline(const std::string& text, const std::string& flag) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, flag + ": not valid JSON: " + text);
  }
}

// A number fills the whole p x q matrix; otherwise an array of rows.
Matrix parse_inline_matrix(const std::string& text, Index rows, Index cols, const std::string& flag) {
  const Json j = parse_inline(text, flag);
  if (j.is_number()) return Matrix::Constant(rows, cols, j.get<double>());
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw Error(ErrorCode::ValidationError, flag + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    const std::string rpath = flag + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw Error(ErrorCode::ValidationError, rpath + ": expected " + std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) {
      m(i, c) = json_entry(row[static_cast<std::size_t>(c)], rpath + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

Vector parse_inline_vector(const std::string& text, const std::string& flag) {
  const Json j = parse_inline(text, flag);
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, flag + ": expected an array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = json_entry(j[i], flag + "[" + std::to_string(i) + "]");
  return v;
}

std::string member_name(const MatrixSet& set, std::size_t k) {
  const std::string& label = set.labels()[k];
  return label.empty() ? "A" + std::to_string(k) : label + " (A" + std::to_string(k) + ")";
}

void describe_set(Report& r, const MatrixSet& set) {
  r.result["input"] = {{"members", set.size()}, {"dim", set.dim()}};
  r.line("input: " + std::to_string(set.size()) + " matrices of dim " + std::to_string(set.dim()));
}

void require_size(const MatrixSet& set, std::size_t n, const char* command) {
  if (set.size() != n) {
    throw Error(ErrorCode::ValidationError, std::string(command) + " needs exactly " +
                                                std::to_string(n) + " matrices, got " +
                                                std::to_string(set.size()));
  }
}

// Attaches a bound with its lower-bound check and maximality certificate.
void attach_bound(Report& r, Json& slot, const std::string& title, const HermitianMatrix& m,
                  const MatrixSet& set, const Tolerances& tol) {
  const MaximalityCertificate c = certify_maximal(m, set, tol);
  slot["matrix"] = matrix_json(m);
  slot["certificate"] = certificate_json(c);
  r.matrix(title, m.matrix());
  r.certificate("  certificate", c);
}

Report cmd_check_order(Context& ctx, const std::string& path) {
  const MatrixSet set = load_set(ctx, path);
  if (set.size() < 2) throw Error(ErrorCode::ValidationError, "check-order needs at least two matrices");
  Report r;
  describe_set(r, set);
  r.line("rule: S <= T iff lambda_min(T - S) >= -psd_rel (1 + ||T - S||)");
  Json pairs = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const OrderVerdict v = loewner_compare(set[i], set[j], ctx.tol);
      const double lmin = eigenvalues(set[j] - set[i])(0);
      pairs.push_back({{"i", i}, {"j", j}, {"order", std::string(to_string(v.order))},
                       {"leq", v.leq}, {"lambda_min_of_difference", lmin}});
      r.line(member_name(set, i) + " vs " + member_name(set, j) + ": " +
             std::string(to_string(v.order)) + " (lambda_min(A_j - A_i) = " + format_number(lmin) + ")");
    }
  }
  r.result["pairs"] = pairs;
  return r;
}

Report cmd_infimum(Context& ctx, const std::string& path, int witnesses) {
  const MatrixSet set = load_set(ctx, path);
  Report r;
  describe_set(r, set);
  const InfimumReport inf = finite_infimum(set, ctx.tol);
  r.result["exists"] = inf.exists;
  r.line("basis: a finite set has an infimum only when one member lies below every other");
  if (inf.exists) {
    r.result["minimizing_index"] = *inf.minimizing_index;
    r.line("infimum: exists, member " + member_name(set, *inf.minimizing_index));
    Json slot;
    attach_bound(r, slot, "infimum", *inf.infimum, set, ctx.tol);
    r.result["infimum"] = slot;
    return r;
  }
  r.result["minimizing_index"] = nullptr;
  r.result["infimum"] = nullptr;
  r.line("infimum: does not exist (no member lies below all the others)");
  if (witnesses > 0) {
    r.line("witnesses: distinct maximal lower bounds, none of which dominates another");
    Json list = Json::array();
    const auto maxima = distinct_maximals(set, static_cast<std::size_t>(witnesses), ctx.tol, ctx.seed);
    for (std::size_t k = 0; k < maxima.size(); ++k) {
      Json slot;
      attach_bound(r, slot, "witness " + std::to_string(k), maxima[k], set, ctx.tol);
      list.push_back(slot);
    }
    r.result["witnesses"] = list;
  }
  return r;
}

Report cmd_maximal_extend(Context& ctx, const std::string& path, const std::string& bound_path) {
  const MatrixSet set = load_set(ctx, path);
  const HermitianMatrix l = load_bound(ctx, bound_path, set.dim());
  Report r;
  describe_set(r, set);
  r.line("method: L plus the positive maximal lower bound of {A_j - L}");
  const HermitianMatrix m = extend_to_maximal(l, set, ctx.tol);
  const bool above = loewner_leq(l, m, ctx.tol);
  r.result["dominates_start"] = above;
  r.line(std::string("extension dominates the starting bound: ") + (above ? "yes" : "no"));
  Json slot;
  attach_bound(r, slot, "maximal lower bound", m, set, ctx.tol);
  r.result["bound"] = slot;
  return r;
}

Report cmd_commuting_glb(Context& ctx, const std::string& path) {
  const MatrixSet set = load_set(ctx, path);
  Report r;
  describe_set(r, set);
  const CommutingAnalysis a = analyze_commuting_bounds(set, ctx.tol);
  r.result["commuting_family"] = a.commuting_family;
  r.result["commutant_dim"] = a.commutant_dim;
  r.line(std::string("members commute pairwise: ") + (a.commuting_family ? "yes" : "no"));
  r.line("dimension of the common commutant: " + std::to_string(a.commutant_dim));
  if (a.commuting_family) {
    const double routes = op_norm(commuting_glb_recursive(set, ctx.tol).matrix() -
                                  commuting_glb_diagonal(set, ctx.tol).matrix());
    r.result["route_difference"] = routes;
    r.line("basis: for a commuting family the greatest commuting lower bound is the entrywise "
           "minimum in a joint eigenbasis; recursion and diagonalization differ by " +
           format_number(routes));
  } else if (a.greatest) {
    r.line("basis: only scalars commute with every member, so the greatest commuting lower "
           "bound is (min lambda_min) I");
  }
  if (!a.greatest) {
    r.result["greatest"] = nullptr;
    r.line("greatest commuting lower bound: not determined (commutant larger than the scalars "
           "for a non-commuting family)");
    return r;
  }
  Json slot;
  attach_bound(r, slot, "greatest commuting lower bound", *a.greatest, set, ctx.tol);
  r.result["greatest"] = slot;
  if (!a.commuting_family) {
    const bool maximal = slot["certificate"]["is_maximal"].get<bool>();
    r.result["maximal_commuting_lower_bound_exists"] = maximal;
    if (!maximal) {
      r.line("conclusion: the greatest commuting lower bound is not maximal, so no maximal lower "
             "bound commutes with the set");
    }
  }
  return r;
}

Report cmd_positive_mlb(Context& ctx, const std::string& path) {
  const MatrixSet set = load_set(ctx, path);
  Report r;
  describe_set(r, set);
  r.line("method: shift by the smallest eigenvalue, split off an attaining eigenvector, recurse on "
         "the Schur complements and lift back");
  const HermitianMatrix m = positive_maximal_lb(set, ctx.tol);
  const bool psd = is_psd(m, ctx.tol);
  r.result["psd"] = psd;
  r.line(std::string("positive semidefinite: ") + (psd ? "yes" : "no"));
  Json slot;
  attach_bound(r, slot, "positive maximal lower bound", m, set, ctx.tol);
  r.result["bound"] = slot;
  return r;
}

Report cmd_positive_glb(Context& ctx, const std::string& path) {
  const MatrixSet set = load_set(ctx, path);
  Report r;
  describe_set(r, set);
  const PositiveGlbReport g = positive_glb_family(set, ctx.tol);
  r.result["k_dim"] = g.k_subspace.dim();
  r.result["parallel_sum"] = matrix_json(g.s_parallel);
  Json tilde = Json::array();
  for (const auto& t : g.tilde_set) tilde.push_back(matrix_json(t));
  r.result["ando_limits"] = tilde;
  r.result["exists"] = g.exists;
  r.line("intersection of the member ranges has dim " + std::to_string(g.k_subspace.dim()));
  r.line("basis: the greatest positive lower bound exists iff the Ando limits [S]A_j (S the "
         "parallel sum of the family) have a least member, which is then the answer");
  for (std::size_t k = 0; k < g.tilde_set.size(); ++k) {
    r.matrix("[S]" + member_name(set, k), g.tilde_set[k].matrix());
  }
  if (g.agrees_with_pair_route) {
    r.result["agrees_with_pair_route"] = *g.agrees_with_pair_route;
    r.line(std::string("two-operator route agrees: ") + (*g.agrees_with_pair_route ? "yes" : "no"));
  } else {
    r.result["agrees_with_pair_route"] = nullptr;
  }
  if (!g.exists) {
    r.result["minimizing_index"] = nullptr;
    r.result["glb"] = nullptr;
    r.line("greatest positive lower bound: does not exist (the Ando limits have no least member)");
    return r;
  }
  r.result["minimizing_index"] = *g.minimizing_index;
  r.result["range_in_k"] = g.range_in_k;
  const bool lower = is_lower_bound(*g.glb, set, ctx.tol);
  const bool psd = is_psd(*g.glb, ctx.tol);
  r.result["is_positive_lower_bound"] = lower && psd;
  r.line("greatest positive lower bound: exists, attained by [S]" + member_name(set, *g.minimizing_index));
  r.line(std::string("positive lower bound: ") + (lower && psd ? "yes" : "no") +
         "; range inside the intersection: " + (g.range_in_k ? "yes" : "no"));
  Json slot;
  attach_bound(r, slot, "greatest positive lower bound", *g.glb, set, ctx.tol);
  r.result["glb"] = slot;
  return r;
}

Report cmd_mlb_mt(Context& ctx, const std::string& path, const std::string& transform) {
  const MatrixSet set = load_set(ctx, path);
  require_size(set, 2, "mlb-mt");
  const Index n = set.dim();
  Matrix t = Matrix::Identity(n, n);
  if (transform == "random") {
    Rng rng = make_rng(ctx.seed);
    t = random_invertible(n, rng);
  } else if (transform != "identity") {
    t = load_single(ctx, transform, n, "--transform");
  }
  ctx.feed(transform == "random" || transform == "identity" ? transform : "file");
  Report r;
  describe_set(r, set);
  r.line("formula: M_T = (A + B - T^H |T^-H (A - B) T^-1| T) / 2, maximal for every invertible T");
  r.result["transform"] = matrix_json(t);
  r.matrix("T", t);
  Json slot;
  attach_bound(r, slot, "M_T", mlb_mt(set[0], set[1], t, ctx.tol), set, ctx.tol);
  r.result["bound"] = slot;
  return r;
}

Report cmd_stott(Context& ctx, int p, int q, const std::optional<std::string>& x_text,
                 const std::optional<std::string>& m_path) {
  if (p < 1 || q < 1) throw Error(ErrorCode::UsageError, "--p and --q must be at least 1");
  if (x_text.has_value() == m_path.has_value()) {
    throw Error(ErrorCode::UsageError, "stott needs exactly one of --x and --m");
  }
  const HermitianMatrix j = signature_matrix(p, q);
  const MatrixSet jzero({j, HermitianMatrix::zero(p + q)}, {"J", "0"});
  ctx.feed(std::to_string(p) + "," + std::to_string(q));
  Report r;
  r.result["p"] = p;
  r.result["q"] = q;
  r.line("pair: {J, 0} with J = diag(I_" + std::to_string(p) + ", -I_" + std::to_string(q) + ")");
  r.line("basis: X -> M(X) = J - S_X is a bijection from p x q matrices onto the maximal lower "
         "bounds of {J, 0}; the inverse reads X off the angular operator of N(M)");
  if (x_text) {
    ctx.feed(*x_text);
    const Matrix x = parse_inline_matrix(*x_text, p, q, "--x");
    const StottPair pair = stott_mx({p, q, x}, ctx.tol);
    r.result["x"] = matrix_json(x);
    r.result["s"] = matrix_json(pair.sx);
    r.matrix("X", x);
    r.matrix("S_X", pair.sx.matrix());
    Json slot;
    attach_bound(r, slot, "M", pair.mx, jzero, ctx.tol);
    r.result["m"] = slot;
    return r;
  }
  const HermitianMatrix m = [&] {
    const Matrix raw = load_single(ctx, *m_path, p + q, "--m");
    try {
      return hermitize(raw, ctx.tol);
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationError, std::string("--m: ") + e.what());
    }
  }();
  const StottParam back = stott_recover_x(m, p, q, ctx.tol);
  const double residual = op_norm(stott_mx(back, ctx.tol).mx.matrix() - m.matrix());
  r.matrix("M", m.matrix());
  r.matrix("recovered X", back.x);
  r.line("round trip ||M(X) - M|| = " + format_number(residual));
  r.result["m"] = matrix_json(m);
  r.result["x"] = matrix_json(back.x);
  r.result["roundtrip_residual"] = residual;
  r.result["certificate"] = certificate_json(certify_maximal(m, jzero, ctx.tol));
  return r;
}

Report cmd_constrained(Context& ctx, const std::string& path, const std::string& u_text) {
  const MatrixSet set = load_set(ctx, path);
  ctx.feed(u_text);
  const Vector u = parse_inline_vector(u_text, "--u");
  if (u.size() != set.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "--u has length " + std::to_string(u.size()) +
                                                  ", the set has dim " + std::to_string(set.dim()));
  }
  Report r;
  describe_set(r, set);
  const ConstrainedResult c = constrained_at_vector(set, u, ctx.tol);
  r.result["u"] = vector_json(u);
  r.result["alpha"] = c.alpha;
  r.result["attaining"] = c.attaining;
  r.result["attaining_members_agree"] = c.attaining_members_agree;
  r.result["bounds_at_u_empty"] = c.bounds_at_u_empty;
  std::string who;
  for (std::size_t k : c.attaining) who += (who.empty() ? "" : ", ") + member_name(set, k);
  r.line("alpha = min (A u, u) = " + format_number(c.alpha) + ", attained by " + who);
  r.line(std::string("attaining members agree at u (Au = Bu): ") +
         (c.attaining_members_agree ? "yes" : "no"));
  r.line("basis: a lower bound L with (L u, u) = alpha exists iff the attaining members agree at u "
         "and the Schur complements over span(u) have a lower bound");
  if (c.reduced_set) {
    Json reduced = Json::array();
    for (const auto& m : *c.reduced_set) reduced.push_back(matrix_json(m));
    r.result["reduced_set"] = reduced;
  } else {
    r.result["reduced_set"] = nullptr;
  }
  if (c.bounds_at_u_empty) {
    r.result["bound"] = nullptr;
    r.line("lower bounds attaining alpha at u: none (the set is empty)");
    return r;
  }
  r.line("lower bounds attaining alpha at u: nonempty");
  const auto m = maximal_in_lu(set, u, ctx.tol);
  if (!m) {
    r.result["bound"] = nullptr;
    return r;
  }
  Json slot;
  attach_bound(r, slot, "maximal lower bound with (M u, u) = alpha", *m, set, ctx.tol);
  slot["value_at_u"] = (u.adjoint() * m->matrix() * u)(0, 0).real();
  r.result["bound"] = slot;
  return r;
}

Report cmd_certify(Context& ctx, const std::string& path, const std::string& bound_path) {
  const MatrixSet set = load_set(ctx, path);
  const HermitianMatrix m = load_bound(ctx, bound_path, set.dim());
  Report r;
  describe_set(r, set);
  Json slot;
  attach_bound(r, slot, "candidate", m, set, ctx.tol);
  const bool extreme = is_extreme_certified(m, set, ctx.tol);
  slot["extreme_point"] = extreme;
  r.line(std::string("extreme point of the lower bounds: ") + (extreme ? "yes" : "not certified"));
  r.result["bound"] = slot;
  return r;
}

Report cmd_parallel_sum(Context& ctx, const std::string& path) {
  const MatrixSet set = load_set(ctx, path);
  Report r;
  describe_set(r, set);
  const HermitianMatrix s = parallel_sum(set, ctx.tol);
  std::vector<Subspace> ranges;
  for (const auto& a : set) ranges.push_back(range_nullspace(a, ctx.tol).range);
  const Index rank = range_nullspace(s, ctx.tol, set.scale()).range.dim();
  const Index meet = subspace_intersect(ranges, ctx.tol).dim();
  r.result["rank"] = rank;
  r.result["range_intersection_dim"] = meet;
  r.line("rule: A : B = A (A + B)^# B, folded left over the family");
  r.line("rank " + std::to_string(rank) + "; intersection of the member ranges has dim " +
         std::to_string(meet));
  const bool lower = is_lower_bound(s, set, ctx.tol);
  r.result["is_lower_bound"] = lower;
  Json slot;
  attach_bound(r, slot, "parallel sum", s, set, ctx.tol);
  r.result["parallel_sum"] = slot;
  return r;
}

Report cmd_ando(Context& ctx, const std::string& path) {
  const MatrixSet set = load_set(ctx, path);
  require_size(set, 2, "ando");
  Report r;
  describe_set(r, set);
  const HermitianMatrix lim = ando_limit(set[0], set[1], ctx.tol);
  const bool below_b = loewner_leq(lim, set[1], ctx.tol);
  const bool psd = is_psd(lim, ctx.tol);
  r.line("rule: [A]B = lim (mA) : B = B^1/2 P B^1/2, P the projection onto N((I - P_range A) B^1/2)");
  r.matrix("[A]B", lim.matrix());
  r.line(std::string("0 <= [A]B <= B: ") + (below_b && psd ? "yes" : "no"));
  r.result["ando_limit"] = matrix_json(lim);
  r.result["psd"] = psd;
  r.result["below_b"] = below_b;
  return r;
}

Report cmd_ensemble(Context& ctx, const std::string& suite, int trials, const std::string& dims,
                    int threads) {
  EnsembleOptions opt;
  opt.suite = suite;
  opt.trials = trials;
  std::tie(opt.dim_lo, opt.dim_hi) = parse_dims(dims);
  opt.seed = ctx.seed;
  opt.threads = threads;
  ctx.feed(suite + " " + std::to_string(trials) + " " + dims);
  return run_ensemble(opt, ctx.tol);
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loewner order toolkit: infima, maximal and greatest lower bounds of Hermitian matrix sets"};
  app.require_subcommand(1);
  Context ctx;
  bool json = false;
  bool timing = false;
  app.add_option("--tol-rank", ctx.tol.rank_rel, "Relative rank threshold")->capture_default_str();
  app.add_option("--tol-psd", ctx.tol.psd_rel, "Relative PSD threshold")->capture_default_str();
  app.add_option("--tol-eq", ctx.tol.eq_rel, "Relative equality threshold")->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for random choices")->capture_default_str();
  app.add_flag("--json", json, "Machine-readable report");
  app.add_flag("--timing", timing, "Include elapsed time in the --json report");

  std::function<Report()> action;
  std::string file = "-";
  std::string bound;
  std::string transform = "identity";
  std::string u_text;
  std::string name;
  std::string dims = "2-5";
  std::optional<std::string> x_text;
  std::optional<std::string> m_path;
  int witnesses = 0;
  int p = 0;
  int q = 0;
  int truncate_n = 5;
  int trials = 100;
  int threads = 1;
  bool fixture_mode = false;

  const auto sub = [&](const char* cmd, const char* help) {
    CLI::App* s = app.add_subcommand(cmd, help);
    s->fallthrough();
    return s;
  };
  const auto with_file = [&](CLI::App* s) {
    s->add_option("file", file, "Matrix-set document, '-' for standard input")->capture_default_str();
    return s;
  };

  with_file(sub("check-order", "Pairwise Loewner comparison of the members"))
      ->callback([&] { action = [&] { return cmd_check_order(ctx, file); }; });
  auto* inf = with_file(sub("infimum", "Decide whether the finite infimum exists"));
  inf->add_option("--witnesses", witnesses, "Distinct maximal lower bounds to show when it does not");
  inf->callback([&] { action = [&] { return cmd_infimum(ctx, file, witnesses); }; });
  auto* ext = with_file(sub("maximal-extend", "Extend a lower bound to a maximal one"));
  ext->add_option("--bound", bound, "Document holding the lower bound")->required();
  ext->callback([&] { action = [&] { return cmd_maximal_extend(ctx, file, bound); }; });
  with_file(sub("commuting-glb", "Greatest lower bound among commuting lower bounds"))
      ->callback([&] { action = [&] { return cmd_commuting_glb(ctx, file); }; });
  with_file(sub("positive-mlb", "Positive maximal lower bound of a PSD family"))
      ->callback([&] { action = [&] { return cmd_positive_mlb(ctx, file); }; });
  with_file(sub("positive-glb", "Greatest positive lower bound of a PSD family"))
      ->callback([&] { action = [&] { return cmd_positive_glb(ctx, file); }; });
  auto* mt = with_file(sub("mlb-mt", "Maximal lower bound M_T of a pair"));
  mt->add_option("--transform", transform, "identity, random, or a document holding T")
      ->capture_default_str();
  mt->callback([&] { action = [&] { return cmd_mlb_mt(ctx, file, transform); }; });
  auto* st = sub("stott", "Maximal lower bounds of {J, 0} from X, or X from M");
  st->add_option("--p", p, "Positive part size")->required();
  st->add_option("--q", q, "Negative part size")->required();
  st->add_option("--x", x_text, "X as JSON: a number fills every entry, or an array of rows");
  st->add_option("--m", m_path, "Document holding a maximal lower bound M of {J, 0}");
  st->callback([&] { action = [&] { return cmd_stott(ctx, p, q, x_text, m_path); }; });
  auto* con = with_file(sub("constrained", "Lower bounds touching the minimum at a unit vector"));
  con->add_option("--u", u_text, "Unit vector as a JSON array")->required();
  con->callback([&] { action = [&] { return cmd_constrained(ctx, file, u_text); }; });
  auto* cert = with_file(sub("certify", "Maximality certificate for a candidate bound"));
  cert->add_option("--bound", bound, "Document holding the candidate")->required();
  cert->callback([&] { action = [&] { return cmd_certify(ctx, file, bound); }; });
  with_file(sub("parallel-sum", "Parallel sum of a PSD family"))
      ->callback([&] { action = [&] { return cmd_parallel_sum(ctx, file); }; });
  with_file(sub("ando", "Ando limit [A]B of a PSD pair"))
      ->callback([&] { action = [&] { return cmd_ando(ctx, file); }; });
  auto* fx = sub("fixture", ("Emit a fixture document: " + join(fixture_names())).c_str());
  fx->add_option("name", name, "Fixture name")->required();
  fx->add_option("--truncate-n", truncate_n, "Truncation N of countable families")->capture_default_str();
  fx->callback([&] { fixture_mode = true; });
  auto* en = sub("ensemble", ("Seeded property ensemble: " + join(suite_names())).c_str());
  en->add_option("suite", name, "Suite name")->required();
  en->add_option("--trials", trials, "Number of trials")->capture_default_str();
  en->add_option("--dims", dims, "Dimension range a-b")->capture_default_str();
  en->add_option("--threads", threads, "Worker threads")->capture_default_str();
  en->callback([&] { action = [&] { return cmd_ensemble(ctx, name, trials, dims, threads); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error [UsageError]: " << e.what() << "\nrun with --help for usage\n";
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    ctx.tol.validate();
    if (fixture_mode) {
      const Fixture f = make_fixture(name, truncate_n);
      out << emit_document(to_document(f.set, name + ": " + f.note));
      return 0;
    }
    ctx.feed(command);
    const auto start = std::chrono::steady_clock::now();
    Report report = action();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.command = command;
    report.digest = fnv1a64(ctx.digest_input);
    const RenderOptions opt{ctx.tol, ctx.seed, timing};
    out << (json ? render_json(report, opt) : render_human(report, opt));
    return report.exit_code;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "] in " << command << ": " << e.what();
    if (e.index()) err << " (member " << *e.index() << ")";
    err << "\n";
    return exit_code_for(e.code());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"loewner"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace loewner::cli
