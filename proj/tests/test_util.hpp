#pragma once

#include <corings/matrix.hpp>

namespace testutil {

// deterministic generator for reproducible pseudo-random exact matrices
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    unsigned long long next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long long small(long long lo, long long hi) { return lo + static_cast<long long>(next() % (hi - lo + 1)); }
};

inline corings::Mat random_mat(corings::Field f, std::size_t r, std::size_t c, Rng& rng, int density_pct = 60) {
    corings::Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng.next() % 100 < static_cast<unsigned>(density_pct)) m.at(i, j) = f.from_int(rng.small(-3, 3));
    return m;
}

} // namespace testutil
