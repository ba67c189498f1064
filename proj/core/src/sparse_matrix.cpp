#include "mpv/sparse_matrix.hpp"

#include <ostream>

namespace mpv {

std::map<Word, int> column_index(const std::vector<Word>& order) {
    std::map<Word, int> idx;
    for (std::size_t k = 0; k < order.size(); ++k) idx.emplace(order[k], static_cast<int>(k));
    return idx;
}

void SparseRationalMatrix::add_relation(const Relation& r, const std::map<Word, int>& column_of) {
    SparseRow row;
    row.reserve(r.terms.size());
    for (const auto& [w, c] : r.terms.terms()) {
        auto it = column_of.find(w);
        if (it == column_of.end())
            throw std::invalid_argument("matrix: relation term outside the column set: " +
                                        w.letters_str());
        row.emplace_back(it->second, c);
    }
    rows.push_back(std::move(row));
}

void SparseRationalMatrix::to_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [col, c] : rows[i]) os << i << ',' << col << ',' << c.get_str() << '\n';
}

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

void strip_content(IntRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) v /= g;
}

// r := p_lead * r - r_lead * p, cancelling the common lead column.
IntRow eliminate(const IntRow& r, const IntRow& p) {
    const mpz_class a = p.front().second, b = r.front().second;
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 1, j = 1;
    while (i < r.size() || j < p.size()) {
        if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i >= r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            mpz_class v = a * r[i].second - b * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    strip_content(out);
    return out;
}

} // namespace

bool RankReducer::add_row(const SparseRow& row) {
    if (row.empty()) return false;
    // Clear denominators, then strip the content.
    mpz_class lcm = 1;
    for (const auto& [c, q] : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntRow r;
    r.reserve(row.size());
    for (const auto& [c, q] : row) {
        mpz_class v = q.get_num() * (lcm / q.get_den());
        if (v != 0) r.emplace_back(c, std::move(v));
    }
    strip_content(r);
    while (!r.empty()) {
        auto it = pivots_.find(r.front().first);
        if (it == pivots_.end()) {
            pivots_.emplace(r.front().first, std::move(r));
            return true;
        }
        r = eliminate(r, it->second);
    }
    return false;
}

int rank(const SparseRationalMatrix& m) {
    RankReducer red;
    for (const auto& row : m.rows) red.add_row(row);
    return red.rank();
}

} // namespace mpv
