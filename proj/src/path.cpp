#include "collatz/path.hpp"

#include <sstream>

namespace collatz {

BigInt pow2(std::uint64_t e) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
    return v;
}

BigInt pow3(std::uint64_t e) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 3, e);
    return v;
}

char move_letter(Move m) {
    return m == Move::Horizontal ? 'H' : 'V';
}

Path Path::validate(std::uint32_t n, std::uint32_t k,
                    std::vector<std::uint32_t> r) {
    if (r.size() != k) {
        throw LengthMismatchError("path has k=" + std::to_string(k) + " but " +
                                  std::to_string(r.size()) + " r entries");
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0 && r[i] < r[i - 1]) {
            throw NotMonotoneError("r must be non-decreasing (r" +
                                   std::to_string(i + 1) + " < r" +
                                   std::to_string(i) + ")");
        }
        if (r[i] > n) {
            throw OutOfRangeError("r" + std::to_string(i + 1) + "=" +
                                  std::to_string(r[i]) + " exceeds n=" +
                                  std::to_string(n));
        }
    }
    return Path(n, k, std::move(r));
}

Path Path::parse(const std::string& literal) {
    const auto bad = [&](const std::string& why) {
        return OutOfRangeError("malformed path literal \"" + literal + "\": " + why);
    };
    const auto c1 = literal.find(':');
    if (c1 == std::string::npos) throw bad("expected n:k:r1,...,rk");
    const auto c2 = literal.find(':', c1 + 1);
    if (c2 == std::string::npos) throw bad("expected n:k:r1,...,rk");

    const auto parse_u32 = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw bad("\"" + s + "\" is not a nonnegative integer");
        unsigned long v = std::stoul(s);
        if (v > 0xffffffffUL) throw bad("\"" + s + "\" is out of range");
        return static_cast<std::uint32_t>(v);
    };

    const std::uint32_t n = parse_u32(literal.substr(0, c1));
    const std::uint32_t k = parse_u32(literal.substr(c1 + 1, c2 - c1 - 1));

    std::vector<std::uint32_t> r;
    const std::string rest = literal.substr(c2 + 1);
    if (!rest.empty()) {
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) r.push_back(parse_u32(item));
        if (!rest.empty() && rest.back() == ',') throw bad("trailing comma");
    }
    return validate(n, k, std::move(r));
}

std::string Path::literal() const {
    std::string out = std::to_string(n_) + ":" + std::to_string(k_) + ":";
    for (std::size_t i = 0; i < r_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r_[i]);
    }
    return out;
}

std::pair<Move, BigInt> collatz_step(const BigInt& x) {
    if (mpz_odd_p(x.get_mpz_t())) {
        return {Move::Horizontal, (3 * x + 1) / 2};
    }
    return {Move::Vertical, x / 2};
}

std::vector<Move> move_sequence(const Path& path) {
    std::vector<Move> moves;
    moves.reserve(path.total_moves());
    std::size_t i = 0;
    for (std::uint32_t j = 0; j <= path.n(); ++j) {
        while (i < path.r().size() && path.r()[i] == j) {
            moves.push_back(Move::Vertical);
            ++i;
        }
        if (j < path.n()) moves.push_back(Move::Horizontal);
    }
    return moves;
}

Trajectory simulate(const BigInt& x0, std::size_t num_moves) {
    Trajectory t;
    t.values.reserve(num_moves + 1);
    t.moves.reserve(num_moves);
    t.grid.reserve(num_moves + 1);
    t.values.push_back(x0);
    t.grid.push_back({0, 0});
    for (std::size_t s = 0; s < num_moves; ++s) {
        auto [m, next] = collatz_step(t.values.back());
        GridPoint g = t.grid.back();
        if (m == Move::Horizontal) ++g.n; else ++g.k;
        t.moves.push_back(m);
        t.values.push_back(std::move(next));
        t.grid.push_back(g);
    }
    return t;
}

bool follows(const BigInt& x0, const Path& path) {
    const std::vector<Move> want = move_sequence(path);
    BigInt x = x0;
    for (Move m : want) {
        auto [got, next] = collatz_step(x);
        if (got != m) return false;
        x = std::move(next);
    }
    return true;
}

BigInt coefficient_a(const Path& path) {
    BigInt a = pow3(path.n()) - pow2(path.total_moves());
    for (std::size_t i = 0; i < path.r().size(); ++i) {
        a += pow3(path.n() - path.r()[i]) * pow2(path.r()[i] + i);
    }
    return a;
}

BigInt coefficient_a_recurrence(const Path& path) {
    BigInt a = 0;
    std::uint32_t n = 0, k = 0;
    for (Move m : move_sequence(path)) {
        if (m == Move::Horizontal) {
            a = 3 * a + pow2(n + k);
            ++n;
        } else {
            ++k;
        }
    }
    return a;
}

AffineForm affine_form(const Path& path) {
    return AffineForm{pow3(path.n()), coefficient_a(path),
                      pow2(path.total_moves())};
}

BigInt apply_path(const BigInt& x0, const Path& path) {
    // Divisibility of the final expression does not imply intermediate
    // parity correctness, so the precondition is checked by simulation.
    if (!follows(x0, path)) {
        throw DoesNotFollowError("x0=" + x0.get_str() +
                                 " does not follow path " + path.literal());
    }
    const AffineForm f = affine_form(path);
    BigInt num = f.mul * x0 + f.add;
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                f.div.get_mpz_t());
    if (rem != 0) {
        throw VerificationFailedError("closed form not divisible for x0=" +
                                      x0.get_str() + " path " + path.literal());
    }
    return q;
}

std::vector<GridPoint> grid_points(const Path& path) {
    std::vector<GridPoint> pts;
    pts.reserve(path.total_moves() + 1);
    pts.push_back({0, 0});
    for (Move m : move_sequence(path)) {
        GridPoint g = pts.back();
        if (m == Move::Horizontal) ++g.n; else ++g.k;
        pts.push_back(g);
    }
    return pts;
}

Path trajectory_path(const BigInt& x0, std::size_t num_moves) {
    std::uint32_t n = 0, k = 0;
    std::vector<std::uint32_t> r;
    BigInt x = x0;
    for (std::size_t s = 0; s < num_moves; ++s) {
        auto [m, next] = collatz_step(x);
        if (m == Move::Horizontal) {
            ++n;
        } else {
            ++k;
            r.push_back(n);
        }
        x = std::move(next);
    }
    return Path::validate(n, k, std::move(r));
}

} // namespace collatz
