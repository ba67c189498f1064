#include "mpv/relation.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

namespace mpv {

std::string family_name(Family f) {
    switch (f) {
        case Family::FDS: return "FDS";
        case Family::RDS: return "RDS";
        case Family::SEED: return "SEED";
        case Family::FDT: return "FDT";
        case Family::RDT: return "RDT";
        case Family::LIFT: return "LIFT";
        case Family::EXTRA: return "EXTRA";
    }
    return "?";
}

std::optional<Family> family_from_string(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (Family f : kFamilyOrder)
        if (family_name(f) == s) return f;
    return std::nullopt;
}

RelationKey relation_key(const LinComb& terms) {
    RelationKey key(terms.terms().begin(), terms.terms().end());
    if (!key.empty()) {
        const Rational lead = key.front().second;
        for (auto& [w, c] : key) c /= lead;
    }
    return key;
}

std::vector<Relation> dedup_and_sort(std::vector<Relation> rels) {
    std::map<RelationKey, std::size_t> seen;
    std::vector<Relation> kept;
    kept.reserve(rels.size());
    for (auto& r : rels) {
        if (r.terms.zero()) continue;
        RelationKey key = relation_key(r.terms);
        if (seen.try_emplace(std::move(key), kept.size()).second) kept.push_back(std::move(r));
    }
    std::sort(kept.begin(), kept.end(), [](const Relation& a, const Relation& b) {
        return relation_key(a.terms) < relation_key(b.terms);
    });
    return kept;
}

std::string relation_to_json(const Relation& r, const LevelContext& ctx) {
    nlohmann::ordered_json j;
    j["w"] = r.weight;
    j["N"] = r.level;
    j["family"] = family_name(r.family);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [w, c] : r.terms.terms()) {
        MpvIndex idx = mpv_from_word(w, ctx);
        nlohmann::ordered_json t;
        t["s"] = idx.s;
        t["i"] = idx.i;
        t["coef"] = c.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = terms;
    return j.dump();
}

Relation relation_from_json(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    Relation r;
    r.weight = j.at("w").get<int>();
    r.level = j.at("N").get<int>();
    auto fam = family_from_string(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("relation_from_json: unknown family");
    r.family = *fam;
    if (j.contains("params"))
        for (const auto& [k, v] : j.at("params").items())
            r.params.emplace_back(k, v.get<std::string>());
    const LevelContext ctx(r.level);
    for (const auto& t : j.at("terms")) {
        MpvIndex idx;
        idx.s = t.at("s").get<std::vector<int>>();
        idx.i = t.at("i").get<std::vector<int>>();
        Rational c(t.at("coef").get<std::string>());
        c.canonicalize();
        r.terms.add(word_from_mpv(idx, ctx), c);
    }
    return r;
}

void write_relations(std::ostream& os, const std::vector<Relation>& rels,
                     const LevelContext& ctx) {
    for (const auto& r : rels) os << relation_to_json(r, ctx) << '\n';
}

std::vector<Relation> read_relations(std::istream& is) {
    std::vector<Relation> rels;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        rels.push_back(relation_from_json(line));
    }
    return rels;
}

} // namespace mpv
