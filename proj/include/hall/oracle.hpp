#pragma once

// Brute-force ground truth. Only the numeric primitives are used here, so
// results stay independent of the sieve and continued-fraction code.

#include <optional>
#include <string>
#include <vector>

#include "hall/numeric.hpp"
#include "hall/polys.hpp"

namespace hall::oracle {

/// Tests the two squares nearest x^3. The returned triplet has no approx.
std::optional<GoodTriplet> goodness(const Natural& x);

/// Every good x in [lo, hi], ascending. Requires 2 <= lo <= hi.
std::vector<GoodTriplet> scan(const Natural& lo, const Natural& hi);

/// sqrt(x)/|k| rounded half-up to two decimals, e.g. "4.26".
/// Throws std::invalid_argument for k = 0.
std::string hall_ratio(const Natural& x, const Integer& k);

}  // namespace hall::oracle
