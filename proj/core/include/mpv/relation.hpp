#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpv/lincomb.hpp"

namespace mpv {

enum class Family { FDS, RDS, SEED, FDT, RDT, LIFT, EXTRA };

// Canonical family order; fixes block order in matrices and reports.
inline constexpr Family kFamilyOrder[] = {Family::FDS, Family::RDS, Family::SEED,
                                          Family::FDT, Family::RDT, Family::LIFT,
                                          Family::EXTRA};

std::string family_name(Family f);                  // "FDS", "RDS", ...
std::optional<Family> family_from_string(std::string s); // accepts either case

// A sparse rational vector over admissible words asserting
// sum coeff * Z(word) = 0, tagged with its generator provenance.
struct Relation {
    int weight = 0;
    int level = 0;
    Family family = Family::FDS;
    std::vector<std::pair<std::string, std::string>> params;
    LinComb terms;
};

// Normal form used for dedup and canonical ordering: scale so the first
// nonzero coefficient in canonical word order is 1.
using RelationKey = std::vector<std::pair<Word, Rational>>;
RelationKey relation_key(const LinComb& terms);

// Deduplicates by key (first occurrence wins) and sorts canonically.
std::vector<Relation> dedup_and_sort(std::vector<Relation> rels);

// JSON-lines serialization:
// {"w":..,"N":..,"family":"FDS",...,"terms":[{"s":[..],"i":[..],"coef":"p/q"},..]}
std::string relation_to_json(const Relation& r, const LevelContext& ctx);
Relation relation_from_json(const std::string& line);
void write_relations(std::ostream& os, const std::vector<Relation>& rels,
                     const LevelContext& ctx);
std::vector<Relation> read_relations(std::istream& is);

} // namespace mpv
