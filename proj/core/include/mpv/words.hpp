#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpv/level.hpp"

namespace mpv {

// One letter of the word alphabet: A is the form dt/t, B(i) is the form
// mu^i dt/(1 - mu^i t).  Letters are stored as a single code so that the
// canonical order A < B(0) < B(1) < ... is plain integer order.
struct Letter {
    std::uint8_t code; // 0 = A, 1+i = B(i)

    static Letter a() { return Letter{0}; }
    static Letter b(int i) { return Letter{static_cast<std::uint8_t>(1 + i)}; }

    bool is_a() const { return code == 0; }
    bool is_b() const { return code != 0; }
    int b_index() const { return static_cast<int>(code) - 1; }

    friend bool operator==(Letter x, Letter y) { return x.code == y.code; }
    friend auto operator<=>(Letter x, Letter y) { return x.code <=> y.code; }
};

// A word over {a, b_0..b_{N-1}}.  Weight is the length, depth the number of
// B-letters.  The empty word is the algebra unit.
struct Word {
    std::vector<std::uint8_t> codes;

    Word() = default;
    explicit Word(std::vector<std::uint8_t> c) : codes(std::move(c)) {}

    static Word one() { return Word{}; }

    int weight() const { return static_cast<int>(codes.size()); }
    int depth() const;
    bool empty() const { return codes.empty(); }

    Letter letter(int k) const { return Letter{codes[static_cast<std::size_t>(k)]}; }
    void push_back(Letter l) { codes.push_back(l.code); }

    // A^1 membership: does not end with the letter a.
    bool in_a1() const { return codes.empty() || codes.back() != 0; }
    bool starts_with_b0() const { return !codes.empty() && codes.front() == 1; }

    // "a b_1 a a b_3" letter form, for diagnostics.
    std::string letters_str() const;
    // Canonical textual form "y(s,i)y(s,i)..." (requires A^1 membership).
    std::string y_str() const;

    friend bool operator==(const Word& x, const Word& y) { return x.codes == y.codes; }
    friend auto operator<=>(const Word& x, const Word& y) { return x.codes <=> y.codes; }
};

// y_{s,i} = a^{s-1} b_i with s >= 1 and i a residue mod N.
struct YFactor {
    int s;
    int i;

    friend bool operator==(const YFactor&, const YFactor&) = default;
    friend auto operator<=>(const YFactor&, const YFactor&) = default;
};

// Index tuple of an MPV L_N(s_1..s_l | i_1..i_l).
struct MpvIndex {
    std::vector<int> s;
    std::vector<int> i;

    int depth() const { return static_cast<int>(s.size()); }
    int weight() const;
    // Convergent iff (s_1, i_1) != (1, 0).
    bool convergent() const;

    std::string str(const LevelContext& ctx) const; // "L[1,2,2|1,0,2]@N=3"

    friend bool operator==(const MpvIndex&, const MpvIndex&) = default;
    friend auto operator<=>(const MpvIndex&, const MpvIndex&) = default;
};

// Admissible: not beginning with b_0 and not ending with a.
bool is_admissible(const Word& w);

// Word <-> y-factor sequence (word must lie in A^1).
std::vector<YFactor> y_factors(const Word& w);
Word word_from_y(const std::vector<YFactor>& ys);

// The two bijections between convergent index tuples and admissible words:
// exponents accumulate as partial sums of the i_k mod N on the way in, and
// as consecutive differences on the way out.
Word word_from_mpv(const MpvIndex& idx, const LevelContext& ctx);
MpvIndex mpv_from_word(const Word& w, const LevelContext& ctx);

// All admissible words of the given weight in canonical lexicographic order.
std::vector<Word> enumerate_admissible(int weight, const LevelContext& ctx);

// N-1 for weight 1, N^2 (N+1)^(w-2) for weight >= 2.
unsigned long long count_admissible(int weight, int level);

YFactor circ_product(const YFactor& z, const YFactor& zp, const LevelContext& ctx);

} // namespace mpv
