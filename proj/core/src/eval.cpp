#include "mpv/eval.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace mpv {

namespace {

// A singularity position along the integration word: zero stands for the
// dt/t form, otherwise the pole sits at the stored unit-modulus point.
struct ZLetter {
    bool zero;
    BigComplex z;
};

// J(word; 0 -> y) for a word with no trailing zero letter, through the
// nested series
//   (-1)^l sum_{k_1 > ... > k_l >= 1} prod_j x_j^{k_j} / k_j^{s_j},
// x_1 = y/u_1, x_j = u_{j-1}/u_j.  Every partial product x_1..x_j = y/u_j
// stays below 1 in modulus, which makes the outer index decay geometric.
BigComplex j_series(const std::vector<ZLetter>& letters, const BigFloat& y, long prec,
                    int target_digits) {
    std::vector<int> s;
    std::vector<BigComplex> u;
    int pending = 1;
    for (const auto& l : letters) {
        if (l.zero) {
            ++pending;
        } else {
            s.push_back(pending);
            u.push_back(l.z);
            pending = 1;
        }
    }
    if (pending != 1) throw std::logic_error("j_series: trailing zero letter");
    const int depth = static_cast<int>(u.size());
    if (depth == 0) return BigComplex::from_long(1, prec);

    std::vector<BigComplex> x;
    x.reserve(static_cast<std::size_t>(depth));
    double rho = 0.0;
    {
        BigComplex ycplx(BigFloat(y), BigFloat::from_long(0, prec));
        x.push_back(ycplx / u[0]);
        for (int j = 1; j < depth; ++j) x.push_back(u[static_cast<std::size_t>(j - 1)] / u[static_cast<std::size_t>(j)]);
        double prod = 1.0;
        for (int j = 0; j < depth; ++j) {
            prod *= abs(x[static_cast<std::size_t>(j)]).to_double();
            rho = std::max(rho, prod);
        }
    }
    if (!(rho < 0.999)) throw std::runtime_error("j_series: series ratio not geometric");

    const double ln_target = -(target_digits + 12) * std::log(10.0);
    const double ln_rho = std::log(rho);
    long terms = static_cast<long>(std::ceil(ln_target / ln_rho)) + 4;
    terms = static_cast<long>(
                std::ceil((ln_target - depth * std::log(static_cast<double>(terms + depth + 1))) /
                          ln_rho)) +
            4;
    if (terms < 8) terms = 8;

    // S[j] accumulates sum_{k_j <= k} x_j^{k_j}/k_j^{s_j} * S[j+1](k_j - 1);
    // updating in ascending j keeps the inner sums one index behind.
    std::vector<BigComplex> sums(static_cast<std::size_t>(depth), BigComplex(prec));
    std::vector<BigComplex> pows(static_cast<std::size_t>(depth), BigComplex::from_long(1, prec));
    for (long k = 1; k <= terms; ++k) {
        for (int j = 0; j < depth; ++j) {
            auto& pw = pows[static_cast<std::size_t>(j)];
            pw *= x[static_cast<std::size_t>(j)];
            BigComplex term = pw;
            for (int rep = 0; rep < s[static_cast<std::size_t>(j)]; ++rep) {
                term.re.div_ui(static_cast<unsigned long>(k));
                term.im.div_ui(static_cast<unsigned long>(k));
            }
            if (j + 1 < depth) term = term * sums[static_cast<std::size_t>(j + 1)];
            sums[static_cast<std::size_t>(j)] += term;
        }
    }
    BigComplex r = sums[0];
    if (depth % 2 != 0) r = -r;
    return r;
}

} // namespace

Evaluator::Evaluator(const LevelContext& ctx, const EvalConfig& cfg)
    : ctx_(ctx), cfg_(cfg), prec_(BigFloat::bits_for_digits(cfg.precision + 25)) {
    const int n = ctx_.level;
    const BigFloat two_pi = BigFloat::from_long(2, prec_) * BigFloat::pi(prec_);
    roots_.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        BigFloat theta = two_pi * BigFloat::from_long(k, prec_) / BigFloat::from_long(n, prec_);
        roots_.emplace_back(cos(theta), sin(theta));
    }
}

BigComplex Evaluator::eval_word(const Word& w) const {
    if (!is_admissible(w) || w.empty())
        throw std::invalid_argument("eval_word: word not admissible: " + w.letters_str());
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    BigComplex v = eval_uncached(w);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return cache_.try_emplace(w, std::move(v)).first->second;
}

BigComplex Evaluator::eval_uncached(const Word& w) const {
    const int n = ctx_.level;
    const int weight = w.weight();
    // Pole of the letter b_i sits at mu^{-i}; the letter a contributes dt/t.
    std::vector<int> bidx(static_cast<std::size_t>(weight), -1); // -1 for a
    std::vector<ZLetter> z;
    z.reserve(static_cast<std::size_t>(weight));
    double min_dist = 1.0; // min |1 - z| over letters with z != 1, capped at 1
    for (int k = 0; k < weight; ++k) {
        const Letter l = w.letter(k);
        if (l.is_a()) {
            z.push_back(ZLetter{true, BigComplex(prec_)});
        } else {
            const int i = l.b_index();
            bidx[static_cast<std::size_t>(k)] = i;
            z.push_back(ZLetter{false, roots_[static_cast<std::size_t>((n - i) % n)]});
            if (i != 0) min_dist = std::min(min_dist, 2.0 * std::sin(M_PI * i / n));
        }
    }
    // Split point: the default 1/2 whenever every series it induces is
    // geometric with ratio <= 1/2; otherwise balance the two sides at
    // 1/(1+m), the smallest worst-case ratio.
    const double split = std::max(cfg_.split, 1.0 / (1.0 + min_dist));
    const BigFloat r = BigFloat::from_double(split, prec_);
    const BigFloat one = BigFloat::from_long(1, prec_);
    const BigFloat y_left = one - r;
    const BigComplex one_c = BigComplex::from_long(1, prec_);

    BigComplex total(prec_);
    for (int j = 0; j <= weight; ++j) {
        // Prefix z_1..z_j integrated over [r,1]: reverse, reflect t -> 1-t,
        // one sign per letter.  The reflected pole of a is 1, of b_0 is 0,
        // of b_i is 1 - mu^{-i}.
        std::vector<ZLetter> left;
        left.reserve(static_cast<std::size_t>(j));
        for (int k = j - 1; k >= 0; --k) {
            const int i = bidx[static_cast<std::size_t>(k)];
            if (i < 0)
                left.push_back(ZLetter{false, one_c});
            else if (i == 0)
                left.push_back(ZLetter{true, BigComplex(prec_)});
            else
                left.push_back(ZLetter{false, one_c - z[static_cast<std::size_t>(k)].z});
        }
        std::vector<ZLetter> right(z.begin() + j, z.end());
        BigComplex term = j_series(left, y_left, prec_, cfg_.precision) *
                          j_series(right, r, prec_, cfg_.precision);
        if (j % 2 != 0) term = -term;
        total += term;
    }
    if (w.depth() % 2 != 0) total = -total;
    return total;
}

BigComplex Evaluator::eval_index(const MpvIndex& idx) const {
    return eval_word(word_from_mpv(idx, ctx_));
}

BigComplex Evaluator::eval_lincomb(const LinComb& lc) const {
    BigComplex acc(prec_);
    for (const auto& [w, c] : lc.terms()) {
        const BigFloat cf = BigFloat::from_rational(c, prec_);
        BigComplex v = w.empty() ? BigComplex::from_long(1, prec_) : eval_word(w);
        acc += BigComplex(v.re * cf, v.im * cf);
    }
    return acc;
}

BigFloat Evaluator::residual(const Relation& r) const { return abs(eval_lincomb(r.terms)); }

BigComplex eval_mpv(const MpvIndex& idx, const LevelContext& ctx, const EvalConfig& cfg) {
    if (!idx.convergent())
        throw std::invalid_argument("eval_mpv: divergent index " + idx.str(ctx));
    return Evaluator(ctx, cfg).eval_index(idx);
}

BigFloat residual(const Relation& r, const LevelContext& ctx, const EvalConfig& cfg) {
    return Evaluator(ctx, cfg).residual(r);
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    const int workers = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::atomic<int> next{0};
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace mpv
