#include "mpv/products.hpp"

#include <mutex>
#include <utility>

namespace mpv {

namespace {

Word prepend(Letter l, const Word& w) {
    Word out;
    out.codes.reserve(w.codes.size() + 1);
    out.codes.push_back(l.code);
    out.codes.insert(out.codes.end(), w.codes.begin(), w.codes.end());
    return out;
}

using ShuffleKey = std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>;
std::map<ShuffleKey, LinComb> shuffle_cache;
std::mutex shuffle_mutex;

LinComb shuffle_words(const Word& u, const Word& v) {
    if (u.empty()) return LinComb(v);
    if (v.empty()) return LinComb(u);
    // The product is symmetric; cache one orientation.
    const bool flip = v.codes < u.codes;
    ShuffleKey key = flip ? ShuffleKey{v.codes, u.codes} : ShuffleKey{u.codes, v.codes};
    {
        std::lock_guard<std::mutex> lock(shuffle_mutex);
        auto it = shuffle_cache.find(key);
        if (it != shuffle_cache.end()) return it->second;
    }
    Word ut{std::vector<std::uint8_t>(u.codes.begin() + 1, u.codes.end())};
    Word vt{std::vector<std::uint8_t>(v.codes.begin() + 1, v.codes.end())};
    LinComb result;
    const LinComb left = shuffle_words(ut, v);
    for (const auto& [w, c] : left.terms()) result.add(prepend(u.letter(0), w), c);
    const LinComb right = shuffle_words(u, vt);
    for (const auto& [w, c] : right.terms()) result.add(prepend(v.letter(0), w), c);
    {
        std::lock_guard<std::mutex> lock(shuffle_mutex);
        shuffle_cache.emplace(std::move(key), result);
    }
    return result;
}

using YSeq = std::vector<YFactor>;

YSeq tau_seq(int j, YSeq ys, const LevelContext& ctx) {
    for (auto& yf : ys) yf.i = ctx.reduce(static_cast<long long>(yf.i) + j);
    return ys;
}

YSeq y_prepend(YFactor head, const YSeq& tail) {
    YSeq out;
    out.reserve(tail.size() + 1);
    out.push_back(head);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

using YComb = std::map<YSeq, Rational>;

struct StuffleKey {
    int level;
    YSeq u, v;
    friend auto operator<=>(const StuffleKey&, const StuffleKey&) = default;
};
std::map<StuffleKey, YComb> stuffle_cache;
std::mutex stuffle_mutex;

void y_add(YComb& acc, const YSeq& ys, const Rational& c) {
    auto [it, inserted] = acc.try_emplace(ys, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

YComb stuffle_y(const YSeq& u, const YSeq& v, const LevelContext& ctx) {
    if (u.empty()) return YComb{{v, 1}};
    if (v.empty()) return YComb{{u, 1}};
    const bool flip = v < u;
    StuffleKey key{ctx.level, flip ? v : u, flip ? u : v};
    {
        std::lock_guard<std::mutex> lock(stuffle_mutex);
        auto it = stuffle_cache.find(key);
        if (it != stuffle_cache.end()) return it->second;
    }
    const YFactor hu = u.front(), hv = v.front();
    const YSeq tu(u.begin() + 1, u.end()), tv(v.begin() + 1, v.end());
    YComb result;
    for (const auto& [ys, c] : stuffle_y(tau_seq(-hu.i, tu, ctx), v, ctx))
        y_add(result, y_prepend(hu, tau_seq(hu.i, ys, ctx)), c);
    for (const auto& [ys, c] : stuffle_y(u, tau_seq(-hv.i, tv, ctx), ctx))
        y_add(result, y_prepend(hv, tau_seq(hv.i, ys, ctx)), c);
    const YFactor merged{hu.s + hv.s, ctx.reduce(static_cast<long long>(hu.i) + hv.i)};
    for (const auto& [ys, c] : stuffle_y(tau_seq(-hu.i, tu, ctx), tau_seq(-hv.i, tv, ctx), ctx))
        y_add(result, y_prepend(merged, tau_seq(merged.i, ys, ctx)), c);
    {
        std::lock_guard<std::mutex> lock(stuffle_mutex);
        stuffle_cache.emplace(std::move(key), result);
    }
    return result;
}

} // namespace

LinComb shuffle(const Word& u, const Word& v) { return shuffle_words(u, v); }

LinComb shuffle(const LinComb& u, const LinComb& v) {
    LinComb result;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            LinComb p = shuffle_words(wu, wv);
            p *= cu * cv;
            result += p;
        }
    return result;
}

Word tau_shift(int j, const Word& w, const LevelContext& ctx) {
    return word_from_y(tau_seq(j, y_factors(w), ctx));
}

LinComb stuffle(const Word& u, const Word& v, const LevelContext& ctx) {
    YComb yc = stuffle_y(y_factors(u), y_factors(v), ctx);
    LinComb result;
    for (const auto& [ys, c] : yc) result.add(word_from_y(ys), c);
    return result;
}

LinComb stuffle(const LinComb& u, const LinComb& v, const LevelContext& ctx) {
    if (!u.in_a1() || !v.in_a1())
        throw std::invalid_argument("stuffle: operand not in A^1");
    LinComb result;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            LinComb p = stuffle(wu, wv, ctx);
            p *= cu * cv;
            result += p;
        }
    return result;
}

void clear_product_caches() {
    {
        std::lock_guard<std::mutex> lock(shuffle_mutex);
        shuffle_cache.clear();
    }
    {
        std::lock_guard<std::mutex> lock(stuffle_mutex);
        stuffle_cache.clear();
    }
}

} // namespace mpv
