#pragma once

#include <stdexcept>
#include <string>

namespace mpv {

// Fixes the level N.  The primitive root mu = exp(2*pi*sqrt(-1)/N) never
// appears in the algebraic core; numeric code materializes it on demand.
struct LevelContext {
    int level;

    explicit LevelContext(int n) : level(n) {
        if (n < 1 || n > 200)
            throw std::invalid_argument("LevelContext: level must be in [1,200], got " +
                                        std::to_string(n));
    }

    // Residue normalized into [0, N).
    int reduce(long long i) const {
        long long r = i % level;
        if (r < 0) r += level;
        return static_cast<int>(r);
    }
};

int euler_phi(int n);
int distinct_prime_factors(int n);

} // namespace mpv
