#pragma once

#include <string>
#include <vector>

#include "loewner/matrix_set.hpp"

namespace loewner::cli {

struct Fixture {
  MatrixSet set;
  std::string note;  // analytic behaviour of the untruncated family
};

/// Known fixture names, in listing order.
const std::vector<std::string>& fixture_names();

/// Finite truncation at `n` of a named family; `n` is ignored by fixtures
/// that are already finite. Throws UnknownFixture, or UsageError if n < 1.
Fixture make_fixture(const std::string& name, int n);

}  // namespace loewner::cli
