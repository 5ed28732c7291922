#include "loewner/cli/document.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace loewner::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

// 1-based line and column of a byte offset
std::string locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

double read_number(const json& j, const std::string& path) {
  if (!j.is_number()) parse_fail(path, "expected a number");
  return j.get<double>();
}

Complex read_entry(const json& j, bool complex, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!complex) parse_fail(path, "expected a number (field_tag is \"real\")");
  if (!j.is_array() || j.size() != 2) parse_fail(path, "expected an [re, im] pair");
  return {read_number(j[0], path + "[0]"), read_number(j[1], path + "[1]")};
}

}  // namespace

Document parse_document(std::string_view text, const std::string& source) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    // keep only the explanation after nlohmann's "[json.exception...] " prefix
    const auto cut = msg.find("] ");
    if (cut != std::string::npos) msg = msg.substr(cut + 2);
    throw Error(ErrorCode::ParseError, source + ":" + locate(text, at) + ": " + msg);
  }
  if (!root.is_object()) parse_fail(source, "document must be an object");

  Document doc;
  if (!root.contains("dim")) parse_fail(source, "missing field \"dim\"");
  const json& dim = root["dim"];
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    parse_fail("dim", "expected a positive integer");
  }
  doc.dim = static_cast<Index>(dim.get<long long>());

  if (!root.contains("field_tag")) parse_fail(source, "missing field \"field_tag\"");
  const json& tag = root["field_tag"];
  if (!tag.is_string() || (tag != "real" && tag != "complex")) {
    parse_fail("field_tag", "expected \"real\" or \"complex\"");
  }
  doc.complex = tag == "complex";

  if (!root.contains("matrices")) parse_fail(source, "missing field \"matrices\"");
  const json& mats = root["matrices"];
  if (!mats.is_array()) parse_fail("matrices", "expected an array of matrices");
  if (mats.empty()) throw Error(ErrorCode::ValidationError, "matrices: at least one matrix required");

  for (std::size_t k = 0; k < mats.size(); ++k) {
    const std::string mpath = "matrices[" + std::to_string(k) + "]";
    const json& rows = mats[k];
    if (!rows.is_array()) parse_fail(mpath, "expected an array of rows");
    if (static_cast<Index>(rows.size()) != doc.dim) {
      throw Error(ErrorCode::ValidationError,
                  mpath + ": has " + std::to_string(rows.size()) + " rows, dim is " +
                      std::to_string(doc.dim),
                  k);
    }
    Matrix m(doc.dim, doc.dim);
    for (Index i = 0; i < doc.dim; ++i) {
      const std::string rpath = mpath + "[" + std::to_string(i) + "]";
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array()) parse_fail(rpath, "expected an array of entries");
      if (static_cast<Index>(row.size()) != doc.dim) {
        throw Error(ErrorCode::ValidationError,
                    rpath + ": has " + std::to_string(row.size()) + " entries, dim is " +
                        std::to_string(doc.dim),
                    k);
      }
      for (Index j = 0; j < doc.dim; ++j) {
        m(i, j) = read_entry(row[static_cast<std::size_t>(j)], doc.complex,
                             rpath + "[" + std::to_string(j) + "]");
      }
    }
    doc.matrices.push_back(std::move(m));
  }

  if (root.contains("labels")) {
    const json& labels = root["labels"];
    if (!labels.is_array()) parse_fail("labels", "expected an array of strings");
    if (labels.size() != mats.size()) {
      throw Error(ErrorCode::ValidationError, "labels: need one label per matrix");
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!labels[k].is_string()) parse_fail("labels[" + std::to_string(k) + "]", "expected a string");
      doc.labels.push_back(labels[k].get<std::string>());
    }
  }
  if (root.contains("note")) {
    if (!root["note"].is_string()) parse_fail("note", "expected a string");
    doc.note = root["note"].get<std::string>();
  }
  return doc;
}

MatrixSet to_matrix_set(const Document& doc, const Tolerances& tol) {
  std::vector<HermitianMatrix> members;
  members.reserve(doc.matrices.size());
  for (std::size_t k = 0; k < doc.matrices.size(); ++k) {
    try {
      members.push_back(hermitize(doc.matrices[k], tol));
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationError,
                  "matrices[" + std::to_string(k) + "]: " + e.what(), k);
    }
  }
  return MatrixSet(std::move(members), doc.labels);
}

MatrixSet parse_matrix_set(std::string_view text, const std::string& source,
                           const Tolerances& tol) {
  return to_matrix_set(parse_document(text, source), tol);
}

std::string emit_document(const Document& doc) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << doc.dim << ",\n  \"field_tag\": \""
      << (doc.complex ? "complex" : "real") << "\",\n  \"matrices\": [\n";
  for (std::size_t k = 0; k < doc.matrices.size(); ++k) {
    const Matrix& m = doc.matrices[k];
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Index j = 0; j < m.cols(); ++j) {
        if (doc.complex) {
          row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        } else {
          row.push_back(m(i, j).real());
        }
      }
      rows.push_back(std::move(row));
    }
    out << "    " << rows.dump() << (k + 1 < doc.matrices.size() ? ",\n" : "\n");
  }
  out << "  ]";
  if (!doc.labels.empty()) out << ",\n  \"labels\": " << json(doc.labels).dump();
  if (!doc.note.empty()) out << ",\n  \"note\": " << json(doc.note).dump();
  out << "\n}\n";
  return out.str();
}

Document to_document(const MatrixSet& set, const std::string& note) {
  Document doc;
  doc.dim = set.dim();
  for (const auto& a : set) {
    doc.matrices.push_back(a.matrix());
    if (a.matrix().imag().cwiseAbs().maxCoeff() != 0.0) doc.complex = true;
  }
  const bool any_label =
      std::any_of(set.labels().begin(), set.labels().end(), [](const auto& s) { return !s.empty(); });
  if (any_label) doc.labels = set.labels();
  doc.note = note;
  return doc;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::UsageError, "cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace loewner::cli
