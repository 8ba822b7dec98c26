#pragma once

#include <vector>

#include "bicircle/rat.hpp"

namespace bicircle {

/// Exact matrix rank over the rationals.
///
/// Rows are scaled to integers, then reduced by fraction-free Bareiss
/// elimination so intermediate entries stay integral.
int rank_exact(const std::vector<std::vector<Rat>>& m);

} // namespace bicircle
