#pragma once

#include <vector>

namespace entb {

// Frozen reference values for the shifted-Chebyshev coefficient table:
// row r holds c_n^(s) for n = r + 2 and s = 2..n. The generator is checked
// against these integers entry by entry.
const std::vector<std::vector<long long>>& shifted_chebyshev_reference();

}  // namespace entb
