#include "mpv/bounds.hpp"

namespace mpv {

DGParams dg_params(int level) {
    DGParams p{level, 0, 0};
    if (level >= 3) {
        p.a = euler_phi(level) / 2 + distinct_prime_factors(level);
        p.b = distinct_prime_factors(level) - 1;
    }
    return p;
}

long long dg_bound(int w, int level) {
    if (w < 0) return 0;
    std::vector<long long> d(static_cast<std::size_t>(w) + 1, 0);
    d[0] = 1;
    if (level == 1) {
        for (int k = 1; k <= w; ++k)
            d[static_cast<std::size_t>(k)] =
                (k >= 2 ? d[static_cast<std::size_t>(k - 2)] : 0) +
                (k >= 3 ? d[static_cast<std::size_t>(k - 3)] : 0);
    } else if (level == 2) {
        for (int k = 1; k <= w; ++k)
            d[static_cast<std::size_t>(k)] =
                d[static_cast<std::size_t>(k - 1)] +
                (k >= 2 ? d[static_cast<std::size_t>(k - 2)] : 0);
    } else {
        const DGParams p = dg_params(level);
        for (int k = 1; k <= w; ++k)
            d[static_cast<std::size_t>(k)] =
                p.a * d[static_cast<std::size_t>(k - 1)] -
                (k >= 2 ? p.b * d[static_cast<std::size_t>(k - 2)] : 0);
    }
    return d[static_cast<std::size_t>(w)];
}

BoundReport sr_bound_report(int w, const LevelContext& ctx, const std::set<Family>& families,
                            std::vector<Relation>* collect_relations,
                            SparseRationalMatrix* collect_matrix) {
    BoundReport report;
    report.weight = w;
    report.level = ctx.level;
    report.dg = dg_bound(w, ctx.level);
    const auto words = enumerate_admissible(w, ctx);
    report.admissible = words.size();
    const auto columns = column_index(words);
    RankReducer reducer;
    SparseRationalMatrix matrix;
    matrix.cols = static_cast<int>(words.size());
    for (auto& block : generate(w, ctx, families)) {
        FamilyRank fr;
        fr.family = block.family;
        fr.rows = static_cast<int>(block.relations.size());
        const int before = reducer.rank();
        for (const auto& rel : block.relations) {
            matrix.add_relation(rel, columns);
            reducer.add_row(matrix.rows.back());
        }
        fr.rank_after = reducer.rank();
        fr.increment = fr.rank_after - before;
        report.per_family.push_back(fr);
        if (collect_relations)
            collect_relations->insert(collect_relations->end(),
                                      std::make_move_iterator(block.relations.begin()),
                                      std::make_move_iterator(block.relations.end()));
    }
    report.rank = reducer.rank();
    report.sr = static_cast<long long>(report.admissible) - report.rank;
    if (collect_matrix) *collect_matrix = std::move(matrix);
    return report;
}

long long sr_bound(int w, const LevelContext& ctx, const std::set<Family>& families) {
    return sr_bound_report(w, ctx, families).sr;
}

Weight2Report weight2_report(const LevelContext& ctx, std::optional<long long> k) {
    Weight2Report rep;
    const int n = ctx.level;
    rep.level = n;
    rep.sr = sr_bound(2, ctx, all_standard_families());
    rep.dg = dg_bound(2, n);
    rep.k = k;
    if (n <= 2)
        rep.delta1 = n - 1;
    else
        rep.delta1 = euler_phi(n) / 2 + distinct_prime_factors(n) - 1;
    if (k) {
        rep.i = rep.delta1 * (rep.delta1 - 1) / 2 - *k;
        rep.delta2 = (n <= 2) ? *rep.i : euler_phi(n) / 2 + *rep.i;
        rep.d = rep.dg - *k;
        rep.nonstandard = rep.sr - *rep.d;
        rep.consistent = *rep.i >= 0 && *rep.d >= 0 && *rep.nonstandard >= 0;
    }
    return rep;
}

} // namespace mpv
