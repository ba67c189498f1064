#include "mpv/words.hpp"

#include <numeric>
#include <sstream>

namespace mpv {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int distinct_prime_factors(int n) {
    int count = 0;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ++count;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ++count;
    return count;
}

int Word::depth() const {
    int d = 0;
    for (auto c : codes)
        if (c != 0) ++d;
    return d;
}

std::string Word::letters_str() const {
    if (codes.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto c : codes) {
        if (!first) os << ' ';
        first = false;
        if (c == 0)
            os << 'a';
        else
            os << 'b' << (static_cast<int>(c) - 1);
    }
    return os.str();
}

std::string Word::y_str() const {
    if (codes.empty()) return "1";
    std::ostringstream os;
    for (const auto& yf : y_factors(*this)) os << "y(" << yf.s << ',' << yf.i << ')';
    return os.str();
}

int MpvIndex::weight() const { return std::accumulate(s.begin(), s.end(), 0); }

bool MpvIndex::convergent() const {
    if (s.empty()) return true;
    return !(s.front() == 1 && i.front() == 0);
}

std::string MpvIndex::str(const LevelContext& ctx) const {
    std::ostringstream os;
    os << "L[";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) os << ',';
        os << s[k];
    }
    os << '|';
    for (std::size_t k = 0; k < i.size(); ++k) {
        if (k) os << ',';
        os << i[k];
    }
    os << "]@N=" << ctx.level;
    return os.str();
}

bool is_admissible(const Word& w) {
    if (w.empty()) return true;
    return w.codes.front() != 1 && w.codes.back() != 0;
}

std::vector<YFactor> y_factors(const Word& w) {
    if (!w.in_a1())
        throw std::invalid_argument("y_factors: word ends with the letter a: " + w.letters_str());
    std::vector<YFactor> ys;
    int pending_a = 0;
    for (auto c : w.codes) {
        if (c == 0) {
            ++pending_a;
        } else {
            ys.push_back(YFactor{pending_a + 1, static_cast<int>(c) - 1});
            pending_a = 0;
        }
    }
    return ys;
}

Word word_from_y(const std::vector<YFactor>& ys) {
    Word w;
    for (const auto& yf : ys) {
        for (int k = 1; k < yf.s; ++k) w.push_back(Letter::a());
        w.push_back(Letter::b(yf.i));
    }
    return w;
}

Word word_from_mpv(const MpvIndex& idx, const LevelContext& ctx) {
    if (idx.s.size() != idx.i.size())
        throw std::invalid_argument("word_from_mpv: exponent and residue lists differ in length");
    for (int sk : idx.s)
        if (sk < 1) throw std::invalid_argument("word_from_mpv: exponents must be positive");
    if (!idx.s.empty() && idx.s.front() == 1 && ctx.reduce(idx.i.front()) == 0)
        throw std::invalid_argument("word_from_mpv: divergent index (s_1, i_1) = (1, 0) at " +
                                    idx.str(ctx));
    std::vector<YFactor> ys;
    long long acc = 0;
    for (std::size_t k = 0; k < idx.s.size(); ++k) {
        acc += idx.i[k];
        ys.push_back(YFactor{idx.s[k], ctx.reduce(acc)});
    }
    return word_from_y(ys);
}

MpvIndex mpv_from_word(const Word& w, const LevelContext& ctx) {
    if (!is_admissible(w))
        throw std::invalid_argument("mpv_from_word: word is not admissible: " + w.letters_str());
    MpvIndex idx;
    int prev = 0;
    for (const auto& yf : y_factors(w)) {
        idx.s.push_back(yf.s);
        idx.i.push_back(ctx.reduce(yf.i - prev));
        prev = yf.i;
    }
    return idx;
}

std::vector<Word> enumerate_admissible(int weight, const LevelContext& ctx) {
    if (weight < 1) throw std::invalid_argument("enumerate_admissible: weight must be >= 1");
    const int n = ctx.level;
    std::vector<Word> out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(weight));
    // Depth-first in code order; codes run over 0..N with 0 = a, 1+i = b_i.
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == weight) {
            out.emplace_back(cur);
            return;
        }
        int lo = 0, hi = n;
        if (pos == 0) lo = (weight == 1) ? 2 : 0;         // never start with b_0
        if (pos == weight - 1) lo = std::max(lo, 1);      // never end with a
        for (int c = lo; c <= hi; ++c) {
            if (pos == 0 && c == 1) continue;
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(c);
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

unsigned long long count_admissible(int weight, int level) {
    if (weight < 1) return 0;
    if (weight == 1) return static_cast<unsigned long long>(level - 1);
    unsigned long long c = static_cast<unsigned long long>(level) * level;
    for (int k = 2; k < weight; ++k) c *= static_cast<unsigned long long>(level + 1);
    return c;
}

YFactor circ_product(const YFactor& z, const YFactor& zp, const LevelContext& ctx) {
    return YFactor{z.s + zp.s, ctx.reduce(static_cast<long long>(z.i) + zp.i)};
}

} // namespace mpv
