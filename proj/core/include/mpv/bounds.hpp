#pragma once

#include <optional>

#include "mpv/families.hpp"
#include "mpv/sparse_matrix.hpp"

namespace mpv {

// Parameters of the dimension bound power series: a = phi(N)/2 + nu(N) and
// b = nu(N) - 1 for N >= 3; N = 1 and N = 2 use their own series.
struct DGParams {
    int level;
    int a = 0;
    int b = 0;
};

DGParams dg_params(int level); // valid for level >= 3

// Coefficient of t^w in (1 - t^2 - t^3)^{-1} for N = 1, (1 - t - t^2)^{-1}
// for N = 2 and (1 - a t + b t^2)^{-1} for N >= 3.
long long dg_bound(int w, int level);

struct FamilyRank {
    Family family;
    int rows = 0;
    int rank_after = 0;
    int increment = 0;
};

struct BoundReport {
    int weight = 0;
    int level = 0;
    unsigned long long admissible = 0;
    int rank = 0;
    long long sr = 0; // admissible - rank
    long long dg = 0;
    std::vector<FamilyRank> per_family;
};

// Generates the selected families, assembles the relation matrix over the
// canonical column order and reduces incrementally family by family.
BoundReport sr_bound_report(int w, const LevelContext& ctx, const std::set<Family>& families,
                            std::vector<Relation>* collect_relations = nullptr,
                            SparseRationalMatrix* collect_matrix = nullptr);

long long sr_bound(int w, const LevelContext& ctx, const std::set<Family>& families);

struct Weight2Report {
    int level = 0;
    long long sr = 0;
    long long dg = 0;
    std::optional<long long> k;           // dim ker of the depth-2 bracket, user input
    long long delta1 = 0;                 // phi(N)/2 + nu(N) - 1 (0 and 1 for N = 1, 2)
    std::optional<long long> i;           // delta1 (delta1 - 1)/2 - k
    std::optional<long long> delta2;      // i, plus phi(N)/2 when N >= 3
    std::optional<long long> d;           // D - k
    std::optional<long long> nonstandard; // SR - d
    bool consistent = true;               // everything derived is non-negative
};

Weight2Report weight2_report(const LevelContext& ctx, std::optional<long long> k);

} // namespace mpv
