#pragma once

#include <vector>

#include "symdiff/rational.hpp"

namespace symdiff {

/// Row-major dense integer matrix; every row has the same length.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.
/// An empty matrix has rank 0.
int exact_rank(IntMatrix rows);

} // namespace symdiff
