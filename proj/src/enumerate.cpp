#include "collatz/enumerate.hpp"

namespace collatz {

namespace {

void emit_r(std::uint32_t n, std::uint32_t k, std::uint32_t pos,
            std::uint32_t min_r, std::vector<std::uint32_t>& r,
            std::vector<Path>& out) {
    if (pos == k) {
        out.push_back(Path::validate(n, k, r));
        return;
    }
    for (std::uint32_t v = min_r; v <= n; ++v) {
        r[pos] = v;
        emit_r(n, k, pos + 1, v, r, out);
    }
}

} // namespace

std::vector<Path> enumerate_paths(std::uint32_t max_moves) {
    std::vector<Path> out;
    for (std::uint32_t s = 0; s <= max_moves; ++s) {
        for (std::uint32_t n = 0; n <= s; ++n) {
            const std::uint32_t k = s - n;
            std::vector<std::uint32_t> r(k);
            emit_r(n, k, 0, 0, r, out);
        }
    }
    return out;
}

} // namespace collatz
