#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loewner/linalg.hpp"
#include "loewner/matrix_set.hpp"

namespace loewner::cli {

/// Matrix-set document:
///   {"dim": n, "field_tag": "real" | "complex",
///    "matrices": [ n x n entries, ... ], "labels": [...]?, "note": "..."?}
/// Real entries are plain numbers; complex entries are [re, im] pairs.
struct Document {
  Index dim = 0;
  bool complex = false;
  std::vector<Matrix> matrices;
  std::vector<std::string> labels;  // empty or one per matrix
  std::string note;
};

/// Parses document text. ParseError carries "source:line:col" for syntax
/// errors and a field path such as "matrices[1][0][2]" for type errors;
/// ValidationError reports shape problems. Matrices are not checked for
/// Hermitian symmetry here.
Document parse_document(std::string_view text, const std::string& source);

/// Document to MatrixSet: every matrix must be Hermitian within eq_rel.
MatrixSet to_matrix_set(const Document& doc, const Tolerances& tol);

/// Shorthand for parse_document followed by to_matrix_set.
MatrixSet parse_matrix_set(std::string_view text, const std::string& source,
                           const Tolerances& tol);

/// Emits a document. Numbers use the shortest text that reads back to the
/// same double, so parse(emit(d)) reproduces d exactly.
std::string emit_document(const Document& doc);

/// Document holding the members and labels of a set; field_tag is "real"
/// when every entry has zero imaginary part.
Document to_document(const MatrixSet& set, const std::string& note = {});

/// Reads a file, or standard input when `path` is "-".
std::string read_input(const std::string& path);

}  // namespace loewner::cli
