#include "loewner/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace loewner::cli {

namespace {

bool all_real(const Matrix& m) { return m.size() == 0 || m.imag().cwiseAbs().maxCoeff() == 0.0; }

Json entry_json(Complex z, bool real) {
  if (real) return z.real();
  return Json::array({z.real(), z.imag()});
}

}  // namespace

Json matrix_json(const Matrix& m) {
  const bool real = all_real(m);
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(entry_json(m(i, j), real));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(const HermitianMatrix& m) { return matrix_json(m.matrix()); }

Json vector_json(const Vector& v) {
  const bool real = all_real(v);
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(entry_json(v(i), real));
  return out;
}

Json certificate_json(const MaximalityCertificate& c) {
  Json j;
  j["is_lower_bound"] = c.is_lower_bound;
  j["per_member_nullspace_dims"] = c.per_member_nullspace_dims;
  j["span_dim"] = c.span_dim;
  j["ambient_dim"] = c.ambient_dim;
  j["ranges_intersect_trivially"] = c.ranges_intersect_trivially;
  j["criteria_agree"] = c.criteria_agree;
  j["is_maximal"] = c.is_maximal;
  return j;
}

std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::vector<std::string> format_matrix(const Matrix& m, const std::string& indent) {
  const bool real = all_real(m);
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      std::string s = format_number(m(i, j).real());
      if (!real && m(i, j).imag() != 0.0) {
        const double im = m(i, j).imag();
        s += (im < 0 ? " - " : " + ") + format_number(std::abs(im)) + "i";
      }
      width = std::max(width, s.size());
      cells.push_back(std::move(s));
    }
  }
  std::vector<std::string> out;
  for (Index i = 0; i < m.rows(); ++i) {
    std::string row = indent + "[";
    for (Index j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[static_cast<std::size_t>(i * m.cols() + j)];
      row += std::string(width - c.size() + 1, ' ') + c;
    }
    out.push_back(row + " ]");
  }
  return out;
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void Report::matrix(const std::string& title, const Matrix& m) {
  line(title + ":");
  for (auto& row : format_matrix(m)) line(std::move(row));
}

void Report::certificate(const std::string& title, const MaximalityCertificate& c) {
  std::string dims;
  for (std::size_t k = 0; k < c.per_member_nullspace_dims.size(); ++k) {
    dims += (k ? ", " : "") + std::to_string(c.per_member_nullspace_dims[k]);
  }
  line(title + ": lower bound " + (c.is_lower_bound ? "yes" : "no") + "; null spaces of A_j - M " +
       "have dims [" + dims + "] and span " + std::to_string(c.span_dim) + " of " +
       std::to_string(c.ambient_dim) + " dimensions; ranges of A_j - M intersect " +
       (c.ranges_intersect_trivially ? "trivially" : "nontrivially"));
  line("  verdict: " + std::string(c.is_maximal ? "MAXIMAL" : "NOT MAXIMAL") +
       " (a lower bound is maximal exactly when these null spaces span the space" +
       (c.criteria_agree ? ")" : "; the range criterion disagrees)"));
}

std::string render_json(const Report& r, const RenderOptions& o) {
  Json j;
  j["command"] = r.command;
  j["inputs_digest"] = "fnv1a64:" + r.digest;
  j["tolerances"] = {{"rank_rel", o.tol.rank_rel}, {"psd_rel", o.tol.psd_rel}, {"eq_rel", o.tol.eq_rel}};
  j["seed"] = o.seed;
  j["result"] = r.result;
  if (o.timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string render_human(const Report& r, const RenderOptions& o) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "inputs: fnv1a64:" << r.digest << "\n";
  for (const auto& l : r.lines) out << l << "\n";
  out << "tolerances: rank_rel " << format_number(o.tol.rank_rel) << ", psd_rel "
      << format_number(o.tol.psd_rel) << ", eq_rel " << format_number(o.tol.eq_rel) << "; seed "
      << o.seed << "\n";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
  out << "elapsed: " << buf << " ms\n";
  return out.str();
}

}  // namespace loewner::cli
