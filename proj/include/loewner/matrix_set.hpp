#pragma once

#include <string>
#include <vector>

#include "loewner/linalg.hpp"

namespace loewner {

/// Nonempty ordered family of Hermitian matrices of one dimension.
/// Order is preserved; algorithms break ties by lowest index.
class MatrixSet {
 public:
  explicit MatrixSet(std::vector<HermitianMatrix> members, std::vector<std::string> labels = {});

  Index dim() const { return members_.front().dim(); }
  std::size_t size() const { return members_.size(); }
  const HermitianMatrix& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<HermitianMatrix>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Per-member labels; empty strings where none were given.
  const std::vector<std::string>& labels() const { return labels_; }

  /// Largest member norm, the reference scale for relative decisions.
  double scale() const;

  /// {A + s : A in set}.
  MatrixSet shifted(const HermitianMatrix& s) const;
  /// {T^H A T : A in set}.
  MatrixSet congruence(const Matrix& t) const;
  MatrixSet reversed() const;

 private:
  std::vector<HermitianMatrix> members_;
  std::vector<std::string> labels_;
};

}  // namespace loewner
