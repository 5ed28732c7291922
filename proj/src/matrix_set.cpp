#include "loewner/matrix_set.hpp"

#include <algorithm>

namespace loewner {

MatrixSet::MatrixSet(std::vector<HermitianMatrix> members, std::vector<std::string> labels)
    : members_(std::move(members)), labels_(std::move(labels)) {
  if (members_.empty()) throw Error(ErrorCode::ValidationError, "matrix set is empty");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].dim() != members_.front().dim()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "member " + std::to_string(i) + " has dimension " +
                      std::to_string(members_[i].dim()) + ", expected " +
                      std::to_string(members_.front().dim()),
                  i);
    }
  }
  if (members_.front().dim() == 0) throw Error(ErrorCode::ValidationError, "zero dimension");
  labels_.resize(members_.size());
}

double MatrixSet::scale() const {
  double s = 0.0;
  for (const auto& m : members_) s = std::max(s, m.norm());
  return s;
}

MatrixSet MatrixSet::shifted(const HermitianMatrix& s) const {
  std::vector<HermitianMatrix> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m + s);
  return MatrixSet(std::move(out), labels_);
}

MatrixSet MatrixSet::congruence(const Matrix& t) const {
  std::vector<HermitianMatrix> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.congruence(t));
  return MatrixSet(std::move(out), labels_);
}

MatrixSet MatrixSet::reversed() const {
  return MatrixSet(std::vector<HermitianMatrix>(members_.rbegin(), members_.rend()),
                   std::vector<std::string>(labels_.rbegin(), labels_.rend()));
}

}  // namespace loewner
