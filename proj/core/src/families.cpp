#include "mpv/families.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace mpv {

namespace {

Word b_word(int i) { return Word{std::vector<std::uint8_t>{static_cast<std::uint8_t>(1 + i)}}; }

Word b0_run(int m) { return Word{std::vector<std::uint8_t>(static_cast<std::size_t>(m), 1)}; }

std::string num(long long v) { return std::to_string(v); }

Relation make_relation(int w, const LevelContext& ctx, Family fam, LinComb terms,
                       std::vector<std::pair<std::string, std::string>> params) {
    Relation r;
    r.weight = w;
    r.level = ctx.level;
    r.family = fam;
    r.params = std::move(params);
    r.terms = std::move(terms);
    return r;
}

// Words in A^1 \ A^0 of the given weight: start with b_0, end with a B.
std::vector<Word> enumerate_nonadmissible_a1(int weight, const LevelContext& ctx) {
    const int n = ctx.level;
    std::vector<Word> out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(weight));
    cur[0] = 1;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == weight) {
            out.emplace_back(cur);
            return;
        }
        const int lo = (pos == weight - 1) ? 1 : 0;
        for (int c = lo; c <= n; ++c) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(c);
            self(self, pos + 1);
        }
    };
    if (weight >= 1) rec(rec, 1);
    return out;
}

} // namespace

std::string xword_str(const XWord& x) {
    std::ostringstream os;
    for (int v : x) {
        if (v < 0)
            os << "x0.";
        else
            os << "x(" << v << ").";
    }
    std::string s = os.str();
    if (!s.empty()) s.pop_back();
    return s;
}

std::vector<Relation> gen_fds(int w, const LevelContext& ctx) {
    std::vector<Relation> rels;
    if (w < 2) return rels;
    for (int a = 1; 2 * a <= w; ++a) {
        const auto us = enumerate_admissible(a, ctx);
        const auto vs = (a == w - a) ? us : enumerate_admissible(w - a, ctx);
        for (std::size_t iu = 0; iu < us.size(); ++iu) {
            const std::size_t jv0 = (a == w - a) ? iu : 0;
            for (std::size_t jv = jv0; jv < vs.size(); ++jv) {
                LinComb diff = stuffle(us[iu], vs[jv], ctx) - shuffle(us[iu], vs[jv]);
                if (diff.zero()) continue;
                rels.push_back(make_relation(w, ctx, Family::FDS, std::move(diff),
                                             {{"u", us[iu].y_str()}, {"v", vs[jv].y_str()}}));
            }
        }
    }
    return dedup_and_sort(std::move(rels));
}

// All words of weight w in A^1 (ending in a B-letter), admissible or not.
static std::vector<Word> enumerate_a1(int weight, const LevelContext& ctx) {
    const int n = ctx.level;
    std::vector<Word> out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(weight));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == weight) {
            out.emplace_back(cur);
            return;
        }
        const int lo = (pos == weight - 1) ? 1 : 0;
        for (int c = lo; c <= n; ++c) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(c);
            self(self, pos + 1);
        }
    };
    if (weight >= 1) rec(rec, 0);
    return out;
}

std::vector<Relation> gen_rds(int w, const LevelContext& ctx) {
    std::vector<Relation> rels;
    if (w < 2) return rels;
    // One generator per divergent word x in A^1 \ A^0 of weight w (at most
    // N(N+1)^{w-2} of them): the two regularization routes agree, so
    //   Z(reg_sha(x)) = Z(expansion of rho(reg_*^T(x)) at T = 0).
    // The rho correction is symbolic; its zeta(n) monomials expand back to
    // words through the shuffle homomorphism.
    for (const auto& x : enumerate_nonadmissible_a1(w, ctx)) {
        const LinComb xc(x);
        LinComb sha_route = regularize(xc, ProductKind::Shuffle, ctx);
        SymTPolynomial corrected = rho_map(decompose_stuffle(xc, ctx));
        LinComb diff = sha_route - expand_shuffle(corrected.coeff(0));
        if (diff.zero()) continue;
        rels.push_back(make_relation(w, ctx, Family::RDS, std::move(diff), {{"x", x.y_str()}}));
    }
    return dedup_and_sort(std::move(rels));
}

std::vector<Relation> gen_rds_b0m(int w, const LevelContext& ctx) {
    std::vector<Relation> rels;
    if (w < 2) return rels;
    for (int m = 1; m < w; ++m) {
        const Word b0m = b0_run(m);
        for (const auto& u : enumerate_admissible(w - m, ctx)) {
            LinComb reg = regularize(stuffle(b0m, u, ctx), ProductKind::Shuffle, ctx);
            if (reg.zero()) continue;
            rels.push_back(make_relation(w, ctx, Family::RDS, std::move(reg),
                                         {{"style", "b0m"}, {"m", num(m)}, {"u", u.y_str()}}));
        }
    }
    return dedup_and_sort(std::move(rels));
}

std::vector<Relation> gen_rds_pairs(int w, const LevelContext& ctx) {
    std::vector<Relation> rels;
    if (w < 2) return rels;
    for (int k = 1; k < w; ++k) {
        const auto vs = enumerate_nonadmissible_a1(k, ctx);
        const auto us = enumerate_admissible(w - k, ctx);
        for (const auto& v : vs) {
            for (const auto& u : us) {
                LinComb diff = stuffle(v, u, ctx) - shuffle(v, u);
                LinComb reg = regularize(diff, ProductKind::Shuffle, ctx);
                if (reg.zero()) continue;
                rels.push_back(make_relation(w, ctx, Family::RDS, std::move(reg),
                                             {{"style", "pair"},
                                              {"v", v.y_str()},
                                              {"u", u.y_str()}}));
            }
        }
    }
    return dedup_and_sort(std::move(rels));
}

std::vector<Relation> gen_weight_one(const LevelContext& ctx) {
    std::vector<Relation> rels;
    const int n = ctx.level;
    if (n < 3) return rels;
    // (N-2)(L(1|j) - L(1|N-j)) = (N-2j)(L(1|1) - L(1|N-1)) for 1 < j < N/2.
    for (int j = 2; 2 * j < n; ++j) {
        LinComb lc;
        lc.add(b_word(j), n - 2);
        lc.add(b_word(n - j), -(n - 2));
        lc.add(b_word(1), -(n - 2 * j));
        lc.add(b_word(n - 1), n - 2 * j);
        if (lc.zero()) continue;
        rels.push_back(make_relation(1, ctx, Family::SEED, std::move(lc),
                                     {{"kind", "symmetric"}, {"j", num(j)}}));
    }
    // sum_{0<=j<d} L(1|a+j d') = L(1|a d) for d | N, d > 1, 1 <= a < d'.
    for (int d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        const int dp = n / d;
        for (int a = 1; a < dp; ++a) {
            LinComb lc;
            for (int j = 0; j < d; ++j) lc.add(b_word(ctx.reduce(a + static_cast<long long>(j) * dp)), 1);
            lc.add(b_word(ctx.reduce(static_cast<long long>(a) * d)), -1);
            if (lc.zero()) continue;
            rels.push_back(make_relation(1, ctx, Family::SEED, std::move(lc),
                                         {{"kind", "distribution"}, {"d", num(d)}, {"a", num(a)}}));
        }
    }
    return dedup_and_sort(std::move(rels));
}

std::vector<Relation> gen_seeded(int w, const LevelContext& ctx) {
    std::vector<Relation> rels;
    if (w < 2 || ctx.level < 4) return rels;
    const auto seeds = gen_weight_one(ctx);
    const auto mults = enumerate_admissible(w - 1, ctx);
    for (std::size_t si = 0; si < seeds.size(); ++si) {
        for (const auto& u : mults) {
            const LinComb um(u);
            LinComb st = stuffle(seeds[si].terms, um, ctx);
            if (!st.zero())
                rels.push_back(make_relation(w, ctx, Family::SEED, std::move(st),
                                             {{"seed", num(static_cast<long long>(si))},
                                              {"mult", u.y_str()},
                                              {"prod", "stuffle"}}));
            LinComb sh = shuffle(seeds[si].terms, um);
            if (!sh.zero())
                rels.push_back(make_relation(w, ctx, Family::SEED, std::move(sh),
                                             {{"seed", num(static_cast<long long>(si))},
                                              {"mult", u.y_str()},
                                              {"prod", "shuffle"}}));
        }
    }
    return dedup_and_sort(std::move(rels));
}

namespace {

// Compositions (s_1..s_n) of w paired with residue tuples (c_1..c_n) over
// [0, dp) such that (s_1, c_1) != (1, 0); the convergent level-dp indices.
void for_each_level_index(int w, int dp, const std::function<void(const MpvIndex&)>& fn) {
    MpvIndex idx;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            fn(idx);
            return;
        }
        for (int s = 1; s <= remaining; ++s) {
            for (int c = 0; c < dp; ++c) {
                if (idx.s.empty() && s == 1 && c == 0) continue;
                idx.s.push_back(s);
                idx.i.push_back(c);
                self(self, remaining - s);
                idx.s.pop_back();
                idx.i.pop_back();
            }
        }
    };
    rec(rec, w);
}

} // namespace

std::vector<Relation> gen_fdt(int w, const LevelContext& ctx) {
    std::vector<Relation> rels;
    if (w < 2) return rels;
    const int n = ctx.level;
    for (int d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        const int dp = n / d;
        for_each_level_index(w, dp, [&](const MpvIndex& lvl) {
            const int depth = lvl.depth();
            // Left side: the level-dp index embedded at level N.
            MpvIndex left;
            left.s = lvl.s;
            for (int c : lvl.i) left.i.push_back(ctx.reduce(static_cast<long long>(c) * d));
            LinComb lc(word_from_mpv(left, ctx));
            // Right side: d^{w-depth} sum over all d-th root lifts.
            Rational scale = 1;
            for (int k = 0; k < w - depth; ++k) scale *= d;
            std::vector<int> pick(static_cast<std::size_t>(depth), 0);
            auto rec = [&](auto&& self, int pos) -> void {
                if (pos == depth) {
                    MpvIndex right;
                    right.s = lvl.s;
                    for (int t = 0; t < depth; ++t)
                        right.i.push_back(ctx.reduce(
                            lvl.i[static_cast<std::size_t>(t)] +
                            static_cast<long long>(pick[static_cast<std::size_t>(t)]) * dp));
                    lc.add(word_from_mpv(right, ctx), -scale);
                    return;
                }
                for (int k = 0; k < d; ++k) {
                    pick[static_cast<std::size_t>(pos)] = k;
                    self(self, pos + 1);
                }
            };
            rec(rec, 0);
            if (lc.zero()) return;
            std::ostringstream os;
            os << left.str(ctx);
            rels.push_back(make_relation(w, ctx, Family::FDT, std::move(lc),
                                         {{"d", num(d)}, {"index", os.str()}}));
        });
    }
    return dedup_and_sort(std::move(rels));
}

namespace {

struct CoeffCacheKey {
    int level;
    XWord x;
    friend auto operator<=>(const CoeffCacheKey&, const CoeffCacheKey&) = default;
};
std::map<CoeffCacheKey, SymbolicPoly> coeff_cache;
std::mutex coeff_mutex;

Word xword_to_word(const XWord& x) {
    Word w;
    for (int v : x) w.push_back(v < 0 ? Letter::a() : Letter::b(v));
    return w;
}

SymbolicPoly coeff_I_impl(const XWord& x, const LevelContext& ctx) {
    if (x.empty()) return SymbolicPoly::constant(1);
    CoeffCacheKey key{ctx.level, x};
    {
        std::lock_guard<std::mutex> lock(coeff_mutex);
        auto it = coeff_cache.find(key);
        if (it != coeff_cache.end()) return it->second;
    }
    const int len = static_cast<int>(x.size());
    int m = 0;
    while (m < len && x[static_cast<std::size_t>(m)] == 0) ++m;
    int nz = 0;
    while (nz < len - m && x[static_cast<std::size_t>(len - 1 - nz)] == -1) ++nz;
    SymbolicPoly result;
    if (m + nz == len && (m == 0 || nz == 0)) {
        // pure x_1^m or pure x_0^n: C = 0
    } else if (m == 0 && nz == 0) {
        result = SymbolicPoly::z_value(xword_to_word(x));
    } else if (m > 0) {
        // -(1/m) sum over insertions of x_1 after each position of the tail
        XWord tail(x.begin() + m, x.end());
        const int q = static_cast<int>(tail.size());
        for (int ins = 1; ins <= q; ++ins) {
            XWord nx;
            nx.reserve(x.size());
            nx.insert(nx.end(), static_cast<std::size_t>(m - 1), 0);
            nx.insert(nx.end(), tail.begin(), tail.begin() + ins);
            nx.push_back(0);
            nx.insert(nx.end(), tail.begin() + ins, tail.end());
            result += coeff_I_impl(nx, ctx);
        }
        result *= Rational(-1, m);
    } else {
        // m == 0, nz > 0: -(1/n) sum over insertions of x_0 before each
        // position of the head
        XWord head(x.begin(), x.end() - nz);
        const int p = static_cast<int>(head.size());
        for (int ins = 1; ins <= p; ++ins) {
            XWord nx;
            nx.reserve(x.size());
            nx.insert(nx.end(), head.begin(), head.begin() + (ins - 1));
            nx.push_back(-1);
            nx.insert(nx.end(), head.begin() + (ins - 1), head.end());
            nx.insert(nx.end(), static_cast<std::size_t>(nz - 1), -1);
            result += coeff_I_impl(nx, ctx);
        }
        result *= Rational(-1, nz);
    }
    {
        std::lock_guard<std::mutex> lock(coeff_mutex);
        coeff_cache.emplace(std::move(key), result);
    }
    return result;
}

} // namespace

SymbolicPoly coeff_I(const XWord& x, const LevelContext& ctx) { return coeff_I_impl(x, ctx); }

std::vector<Relation> gen_rdt(int w, const LevelContext& ctx) {
    std::vector<Relation> rels;
    if (w < 2) return rels;
    const int n = ctx.level;
    for (int d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        const int dp = n / d;
        // exp factor: S = sum_{j=1}^{d-1} Z(b_{j d'})
        SymbolicPoly s_factor;
        for (int j = 1; j < d; ++j)
            s_factor += SymbolicPoly::z_value(b_word(ctx.reduce(static_cast<long long>(j) * dp)));
        // Alphabet of the target algebra: x_0 and x_{mu^{c d}} for c in [0, dp).
        std::vector<int> alphabet;
        alphabet.push_back(-1);
        for (int c = 0; c < dp; ++c) alphabet.push_back(ctx.reduce(static_cast<long long>(c) * d));
        XWord xw(static_cast<std::size_t>(w), 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos < w) {
                for (int letter : alphabet) {
                    xw[static_cast<std::size_t>(pos)] = letter;
                    self(self, pos + 1);
                }
                return;
            }
            // Left side: p^d_* preimage sum with a factor d per x_0 letter.
            SymbolicPoly lhs;
            Rational zero_scale = 1;
            for (int v : xw)
                if (v < 0) zero_scale *= d;
            XWord pre(static_cast<std::size_t>(w), 0);
            auto lift = [&](auto&& self2, int pos2) -> void {
                if (pos2 == w) {
                    lhs += coeff_I(pre, ctx);
                    return;
                }
                const int v = xw[static_cast<std::size_t>(pos2)];
                if (v < 0) {
                    pre[static_cast<std::size_t>(pos2)] = -1;
                    self2(self2, pos2 + 1);
                    return;
                }
                const int c = v / d; // v = c * d with c < dp
                for (int k = 0; k < d; ++k) {
                    pre[static_cast<std::size_t>(pos2)] = c + k * dp;
                    self2(self2, pos2 + 1);
                }
            };
            lift(lift, 0);
            lhs *= zero_scale;
            // Right side: sum over leading x_1 prefixes absorbed into exp(S x_1).
            SymbolicPoly rhs = coeff_I(xw, ctx);
            SymbolicPoly s_power = SymbolicPoly::constant(1);
            Rational kfact = 1;
            for (int k = 1; k <= w; ++k) {
                if (xw[static_cast<std::size_t>(k - 1)] != 0) break;
                s_power = s_power * s_factor;
                kfact *= k;
                XWord suffix(xw.begin() + k, xw.end());
                rhs += (1 / kfact) * (s_power * coeff_I(suffix, ctx));
            }
            LinComb diff = expand_shuffle(lhs - rhs);
            if (diff.zero()) return;
            rels.push_back(make_relation(w, ctx, Family::RDT, std::move(diff),
                                         {{"d", num(d)}, {"xword", xword_str(xw)}}));
        };
        rec(rec, 0);
    }
    return dedup_and_sort(std::move(rels));
}

std::vector<Relation> gen_lifted(int w, const LevelContext& ctx,
                                 const std::set<Family>& base_families) {
    std::vector<Relation> rels;
    if (w < 3) return rels;
    for (int v = 2; v < w; ++v) {
        std::vector<Relation> bases;
        auto append = [&](std::vector<Relation> more) {
            bases.insert(bases.end(), std::make_move_iterator(more.begin()),
                         std::make_move_iterator(more.end()));
        };
        if (base_families.count(Family::FDS)) append(gen_fds(v, ctx));
        if (base_families.count(Family::RDS)) append(gen_rds(v, ctx));
        if (base_families.count(Family::RDT)) append(gen_rdt(v, ctx));
        if (bases.empty()) continue;
        const auto mults = enumerate_admissible(w - v, ctx);
        for (std::size_t bi = 0; bi < bases.size(); ++bi) {
            const Relation& base = bases[bi];
            for (const auto& u : mults) {
                const LinComb um(u);
                LinComb st = stuffle(base.terms, um, ctx);
                if (!st.zero())
                    rels.push_back(make_relation(
                        w, ctx, Family::LIFT, std::move(st),
                        {{"base_family", family_name(base.family)},
                         {"base_weight", num(v)},
                         {"base", num(static_cast<long long>(bi))},
                         {"mult", u.y_str()},
                         {"prod", "stuffle"}}));
                LinComb sh = shuffle(base.terms, um);
                if (!sh.zero())
                    rels.push_back(make_relation(
                        w, ctx, Family::LIFT, std::move(sh),
                        {{"base_family", family_name(base.family)},
                         {"base_weight", num(v)},
                         {"base", num(static_cast<long long>(bi))},
                         {"mult", u.y_str()},
                         {"prod", "shuffle"}}));
            }
        }
    }
    return dedup_and_sort(std::move(rels));
}

namespace {

struct ExtraTerm {
    std::vector<int> s;
    std::vector<int> i;
    long coef;
};

Relation build_extra(int w, const LevelContext& ctx, const std::vector<ExtraTerm>& terms,
                     const std::string& name) {
    LinComb lc;
    for (const auto& t : terms) {
        MpvIndex idx;
        idx.s = t.s;
        idx.i = t.i;
        lc.add(word_from_mpv(idx, ctx), t.coef);
    }
    Relation r = make_relation(w, ctx, Family::EXTRA, std::move(lc), {{"name", name}});
    return r;
}

} // namespace

std::vector<Relation> extra_relations(int w, const LevelContext& ctx) {
    std::vector<Relation> rels;
    const int n = ctx.level;
    if (w == 2 && n == 8) {
        // 37 L(1,1) = 34 D(5) + 112 L(3,1) + 11 L(3,0) + 37 D(1) - 2 L(2,6)
        //           + 3 L(7,3) - 111 L(5,7) + 38 L(7,7) - 8 L(5,5)
        rels.push_back(build_extra(
            2, ctx,
            {{{1, 1}, {1, 1}, 37},  {{2}, {5}, -34},     {{1, 1}, {3, 1}, -112},
             {{1, 1}, {3, 0}, -11}, {{2}, {1}, -37},     {{1, 1}, {2, 6}, 2},
             {{1, 1}, {7, 3}, -3},  {{1, 1}, {5, 7}, 111}, {{1, 1}, {7, 7}, -38},
             {{1, 1}, {5, 5}, 8}},
            "level8"));
    } else if (w == 2 && n == 10) {
        rels.push_back(build_extra(
            2, ctx,
            {{{1, 1}, {5, 2}, 7},    {{2}, {1}, -72},      {{2}, {7}, -265},
             {{1, 1}, {2, 5}, 7},    {{1, 1}, {4, 2}, 467}, {{1, 1}, {8, 6}, -467},
             {{1, 1}, {5, 6}, -14},  {{1, 1}, {9, 8}, -64}, {{1, 1}, {9, 4}, 164},
             {{1, 1}, {7, 9}, -166}, {{1, 1}, {8, 1}, 260}, {{1, 1}, {3, 9}, 66},
             {{1, 1}, {6, 9}, 7},    {{1, 1}, {6, 5}, -7}},
            "level10"));
    } else if (w == 2 && n == 12) {
        rels.push_back(build_extra(
            2, ctx,
            {{{1, 1}, {8, 7}, 1},     {{2}, {5}, -5},         {{1, 1}, {8, 10}, -8},
             {{1, 1}, {10, 11}, 6},   {{1, 1}, {9, 11}, 8},   {{1, 1}, {10, 9}, -1},
             {{1, 1}, {8, 1}, 15},    {{1, 1}, {9, 10}, -5},  {{1, 1}, {6, 1}, -5},
             {{1, 1}, {1, 1}, 1},     {{1, 1}, {8, 11}, -6},  {{1, 1}, {6, 11}, 11},
             {{1, 1}, {8, 3}, -8},    {{1, 1}, {11, 8}, 1}},
            "level12a"));
        rels.push_back(build_extra(
            2, ctx,
            {{{1, 1}, {8, 11}, 60},   {{1, 1}, {8, 7}, -38},  {{1, 1}, {10, 11}, -348},
             {{1, 1}, {9, 11}, -502}, {{1, 1}, {10, 9}, 492}, {{1, 1}, {8, 1}, -600},
             {{1, 1}, {9, 10}, 552},  {{1, 1}, {11, 10}, 154}, {{1, 1}, {6, 1}, -20},
             {{1, 1}, {6, 11}, -261}, {{1, 1}, {8, 3}, 502},  {{1, 1}, {11, 8}, -221},
             {{1, 1}, {8, 10}, 319}},
            "level12b"));
        rels.push_back(build_extra(
            2, ctx,
            {{{1, 1}, {1, 1}, 221},    {{1, 1}, {8, 10}, -1854}, {{1, 1}, {8, 7}, -562},
             {{1, 1}, {10, 11}, 1018}, {{1, 1}, {9, 11}, 2416},  {{1, 1}, {10, 9}, -319},
             {{1, 1}, {8, 1}, 4270},   {{1, 1}, {9, 10}, -2293}, {{1, 1}, {11, 10}, -956},
             {{1, 1}, {6, 1}, -1110},  {{1, 1}, {8, 11}, -2416}, {{1, 1}, {6, 11}, 3305},
             {{1, 1}, {8, 3}, -2416}},
            "level12c"));
    } else if (w == 3 && n == 4) {
        // 5 L(1,2|2,3) = 46 L(1,1,1|1,0,0) - 7 L(1,1,1|2,2,1) - 13 L(1,1,1|1,1,1)
        //   + 13 L(1,2|3,1) - L(1,1,1|3,2,0) + 25 L(1,1,1|3,0,0)
        //   - 8 L(1,1,1|1,1,2) + 18 L(2,1|3,0)
        rels.push_back(build_extra(
            3, ctx,
            {{{1, 2}, {2, 3}, 5},        {{1, 1, 1}, {1, 0, 0}, -46}, {{1, 1, 1}, {2, 2, 1}, 7},
             {{1, 1, 1}, {1, 1, 1}, 13}, {{1, 2}, {3, 1}, -13},       {{1, 1, 1}, {3, 2, 0}, 1},
             {{1, 1, 1}, {3, 0, 0}, -25}, {{1, 1, 1}, {1, 1, 2}, 8},  {{2, 1}, {3, 0}, -18}},
            "level4w3"));
    }
    return rels;
}

std::set<Family> all_standard_families() {
    return {Family::FDS, Family::RDS, Family::SEED, Family::FDT, Family::RDT, Family::LIFT};
}

std::set<Family> parse_families(const std::string& csv) {
    std::set<Family> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto f = family_from_string(item);
        if (!f) throw std::invalid_argument("unknown family: " + item);
        out.insert(*f);
    }
    return out;
}

std::vector<FamilyBlock> generate(int w, const LevelContext& ctx, const std::set<Family>& which) {
    std::vector<FamilyBlock> blocks;
    for (Family f : kFamilyOrder) {
        if (!which.count(f)) continue;
        std::vector<Relation> rels;
        switch (f) {
            case Family::FDS: rels = gen_fds(w, ctx); break;
            case Family::RDS: rels = gen_rds(w, ctx); break;
            case Family::SEED:
                rels = (w == 1) ? gen_weight_one(ctx) : gen_seeded(w, ctx);
                break;
            case Family::FDT: rels = gen_fdt(w, ctx); break;
            case Family::RDT: rels = gen_rdt(w, ctx); break;
            case Family::LIFT: {
                std::set<Family> bases;
                for (Family b : {Family::FDS, Family::RDS, Family::RDT})
                    if (which.count(b)) bases.insert(b);
                if (bases.empty()) bases = {Family::FDS, Family::RDS, Family::RDT};
                rels = gen_lifted(w, ctx, bases);
                break;
            }
            case Family::EXTRA: rels = extra_relations(w, ctx); break;
        }
        blocks.push_back(FamilyBlock{f, std::move(rels)});
    }
    return blocks;
}

} // namespace mpv
