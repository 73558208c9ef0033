#pragma once

#include <vector>

#include "collatz/path.hpp"

namespace collatz {

// All valid paths with total moves <= max_moves, in canonical order:
// ascending total moves, then ascending n, then lexicographic r.
// There are 2^{max_moves+1} - 1 of them.
std::vector<Path> enumerate_paths(std::uint32_t max_moves);

} // namespace collatz
