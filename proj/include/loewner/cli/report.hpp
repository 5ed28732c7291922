#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "loewner/bounds.hpp"
#include "loewner/linalg.hpp"

namespace loewner::cli {

using Json = nlohmann::ordered_json;

/// Rows of entries: plain numbers when every entry is real, [re, im]
/// pairs otherwise.
Json matrix_json(const Matrix& m);
Json matrix_json(const HermitianMatrix& m);
Json vector_json(const Vector& v);
Json certificate_json(const MaximalityCertificate& c);

/// Human rendering, one line per row, each prefixed by `indent`.
std::vector<std::string> format_matrix(const Matrix& m, const std::string& indent = "    ");
std::string format_number(double x);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

struct Report {
  std::string command;
  std::string digest;              // of the canonical inputs
  Json result = Json::object();    // machine-readable verdicts
  std::vector<std::string> lines;  // annotated human report
  double elapsed_ms = 0.0;
  int exit_code = 0;

  void line(std::string s) { lines.push_back(std::move(s)); }
  void matrix(const std::string& title, const Matrix& m);
  void certificate(const std::string& title, const MaximalityCertificate& c);
};

struct RenderOptions {
  Tolerances tol;
  std::uint64_t seed = 0;
  bool timing = false;  // elapsed time is shown only on request in --json
};

/// Byte-stable for identical inputs, tolerances and seed unless
/// `timing` is set.
std::string render_json(const Report& r, const RenderOptions& o);
std::string render_human(const Report& r, const RenderOptions& o);

}  // namespace loewner::cli
