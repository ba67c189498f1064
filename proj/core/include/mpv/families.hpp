#pragma once

#include <set>

#include "mpv/relation.hpp"
#include "mpv/symbols.hpp"

namespace mpv {

// Word over the distribution alphabet {x_0} cup {x_sigma : sigma in Gamma}.
// Letters are encoded as -1 for x_0 and the residue j for x_{mu^j}.
using XWord = std::vector<int>;

std::string xword_str(const XWord& x);

// Finite double shuffle: Z(u * v - u sha v) = 0 over unordered pairs of
// admissible words with |u| + |v| = w.
std::vector<Relation> gen_fds(int w, const LevelContext& ctx);

// Regularized double shuffle: reg_sha(b_0 * u - b_0 sha u) = 0 for every
// u in A^1 of weight w-1 (at most N(N+1)^{w-2} generators).
std::vector<Relation> gen_rds(int w, const LevelContext& ctx);

// The two generator styles of the regularization theorem, kept for the
// rank-equivalence checks: b0m emits reg_sha(b_0^m * u) over 1 <= m < w and
// admissible u; pairs emits reg_sha(v * u - v sha u) over non-admissible
// v in A^1 and admissible u.
std::vector<Relation> gen_rds_b0m(int w, const LevelContext& ctx);
std::vector<Relation> gen_rds_pairs(int w, const LevelContext& ctx);

// Bass symmetric and distribution relations among the L_N(1|j); empty for
// N < 3.
std::vector<Relation> gen_weight_one(const LevelContext& ctx);

// Weight-one relations multiplied into weight w by admissible words (the
// stuffle form as defined, plus the shuffle-multiplied duplicates).
std::vector<Relation> gen_seeded(int w, const LevelContext& ctx);

// Finite distribution relations: for every divisor d > 1 of N, the d-th
// power map identity on level-N/d indices embedded into level N.
std::vector<Relation> gen_fdt(int w, const LevelContext& ctx);

// Coefficient of the regularized group-like generating series on the given
// x-word, computed by the insertion recursion; memoized per level.
SymbolicPoly coeff_I(const XWord& x, const LevelContext& ctx);

// Regularized distribution relations: coefficient comparison of
// p^d_*(I) = exp(sum_{sigma^d=1, sigma != 1} Li_1(sigma) x_1) i_d^*(I)
// over all weight-w words on the level-N/d alphabet.
std::vector<Relation> gen_rdt(int w, const LevelContext& ctx);

// Lower-weight relations from the base families multiplied by admissible
// words under both products.
std::vector<Relation> gen_lifted(int w, const LevelContext& ctx,
                                 const std::set<Family>& base_families);

// The hard-coded non-standard fixtures at (2,8), (2,10), (2,12) and (3,4);
// kept out of every standard bound.
std::vector<Relation> extra_relations(int w, const LevelContext& ctx);

struct FamilyBlock {
    Family family;
    std::vector<Relation> relations;
};

std::set<Family> all_standard_families();
std::set<Family> parse_families(const std::string& csv); // "fds,rds,..."

// Runs the selected generators in canonical family order.  At weight one
// the SEED block holds the weight-one relations themselves.  Lifted bases
// are the selected members of {FDS, RDS, RDT} (all three when none is
// selected).
std::vector<FamilyBlock> generate(int w, const LevelContext& ctx, const std::set<Family>& which);

} // namespace mpv
