#pragma once

#include <gmpxx.h>

#include <map>

#include "mpv/words.hpp"

namespace mpv {

using Rational = mpq_class;

// Finite formal Q-linear combination of words.  Zero coefficients are never
// stored; all arithmetic is exact.
class LinComb {
public:
    using Terms = std::map<Word, Rational>;

    LinComb() = default;
    explicit LinComb(const Word& w, const Rational& c = 1) {
        if (c != 0) terms_[w] = c;
    }

    const Terms& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb x, const LinComb& y) { return x += y; }
    friend LinComb operator-(LinComb x, const LinComb& y) { return x -= y; }
    friend LinComb operator*(LinComb x, const Rational& c) { return x *= c; }
    friend LinComb operator*(const Rational& c, LinComb x) { return x *= c; }
    friend bool operator==(const LinComb& x, const LinComb& y) { return x.terms_ == y.terms_; }

    // Sum of all coefficients (the shuffle mass oracle counts with this).
    Rational mass() const {
        Rational m = 0;
        for (const auto& [w, c] : terms_) m += c;
        return m;
    }

    // True when every support word lies in A^1 / is admissible.
    bool in_a1() const {
        for (const auto& [w, c] : terms_)
            if (!w.in_a1()) return false;
        return true;
    }
    bool admissible_support() const {
        for (const auto& [w, c] : terms_)
            if (!is_admissible(w)) return false;
        return true;
    }

    std::string str() const;

private:
    Terms terms_;
};

} // namespace mpv
