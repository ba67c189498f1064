#pragma once

#include <mutex>

#include "mpv/bigfloat.hpp"
#include "mpv/relation.hpp"

namespace mpv {

struct EvalConfig {
    int precision = 30;   // decimal digits
    double split = 0.5;   // Hoelder split point; raised automatically when a
                          // singularity sits too close to 1 for the left
                          // series to stay geometric
    int threads = 1;
};

// High-precision evaluation of MPVs at level-N roots of unity through the
// iterated-integral representation split at an interior point, so that every
// resulting nested series converges geometrically.  Values are cached per
// word; the cache may be shared across threads.
class Evaluator {
public:
    Evaluator(const LevelContext& ctx, const EvalConfig& cfg);

    BigComplex eval_word(const Word& w) const;       // admissible words only
    BigComplex eval_index(const MpvIndex& idx) const; // convergent indices only
    BigComplex eval_lincomb(const LinComb& lc) const;
    BigFloat residual(const Relation& r) const;

    const LevelContext& context() const { return ctx_; }
    const EvalConfig& config() const { return cfg_; }
    long prec_bits() const { return prec_; }

private:
    BigComplex eval_uncached(const Word& w) const;

    LevelContext ctx_;
    EvalConfig cfg_;
    long prec_;
    std::vector<BigComplex> roots_; // mu^k for k in [0, N)
    mutable std::map<Word, BigComplex> cache_;
    mutable std::mutex cache_mutex_;
};

BigComplex eval_mpv(const MpvIndex& idx, const LevelContext& ctx, const EvalConfig& cfg);
BigFloat residual(const Relation& r, const LevelContext& ctx, const EvalConfig& cfg);

// Runs fn(i) for i in [0, n) over the configured number of threads; results
// land in pre-sized slots so the outcome is thread-count independent.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

} // namespace mpv
