#pragma once

#include "mpv/tpoly.hpp"

namespace mpv {

// Formal product of Z-values, kept as a sorted multiset of admissible words.
using ZMonomial = std::vector<Word>;

// Q-linear combination of Z-monomials.  Products reduce to plain LinCombs
// through the shuffle homomorphism Z(u)Z(v) = Z(u sha v).
class SymbolicPoly {
public:
    using Terms = std::map<ZMonomial, Rational>;

    SymbolicPoly() = default;
    static SymbolicPoly constant(const Rational& c) {
        SymbolicPoly p;
        p.add(ZMonomial{}, c);
        return p;
    }
    static SymbolicPoly z_value(const Word& w, const Rational& c = 1) {
        SymbolicPoly p;
        p.add(ZMonomial{w}, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    void add(ZMonomial m, const Rational& c);

    SymbolicPoly& operator+=(const SymbolicPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    SymbolicPoly& operator-=(const SymbolicPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    SymbolicPoly& operator*=(const Rational& c);

    friend SymbolicPoly operator+(SymbolicPoly x, const SymbolicPoly& y) { return x += y; }
    friend SymbolicPoly operator-(SymbolicPoly x, const SymbolicPoly& y) { return x -= y; }
    friend SymbolicPoly operator*(SymbolicPoly x, const Rational& c) { return x *= c; }
    friend SymbolicPoly operator*(const Rational& c, SymbolicPoly x) { return x *= c; }
    friend SymbolicPoly operator*(const SymbolicPoly& x, const SymbolicPoly& y);

    int weight() const; // common total weight of the monomials, -1 if mixed

private:
    Terms terms_;
};

// Embeds a plain combination of words as a combination of single-word
// Z-monomials.
SymbolicPoly embed(const LinComb& u);

// Reduces every monomial to a single Z-value via iterated shuffle.
LinComb expand_shuffle(const SymbolicPoly& p);

// The zeta(n) symbol is the admissible word a^{n-1} b_0.
Word zeta_word(int n);

// T-polynomial with symbolic coefficients, the codomain of the rho map.
struct SymTPolynomial {
    std::vector<SymbolicPoly> coeffs;

    int degree() const {
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            if (!coeffs[static_cast<std::size_t>(k)].zero()) return k;
        return -1;
    }
    const SymbolicPoly& coeff(int k) const {
        static const SymbolicPoly zero;
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return zero;
        return coeffs[static_cast<std::size_t>(k)];
    }
    SymbolicPoly& at(int k) {
        if (k >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(k) + 1);
        return coeffs[static_cast<std::size_t>(k)];
    }
};

// The correction map rho determined by
//   rho(e^{Tu}) = exp( sum_{n>=2} (-1)^n zeta(n) u^n / n ) e^{Tu},
// applied coefficient-wise with zeta(n) kept symbolic.  Truncation at the
// degree of the input is exact: higher terms vanish by weight grading.
SymTPolynomial rho_map(const TPolynomial& p);

} // namespace mpv
