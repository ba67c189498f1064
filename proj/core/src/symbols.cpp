#include "mpv/symbols.hpp"

#include <algorithm>

namespace mpv {

void SymbolicPoly::add(ZMonomial m, const Rational& c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolicPoly& SymbolicPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SymbolicPoly operator*(const SymbolicPoly& x, const SymbolicPoly& y) {
    SymbolicPoly r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            ZMonomial m = mx;
            m.insert(m.end(), my.begin(), my.end());
            r.add(std::move(m), cx * cy);
        }
    return r;
}

int SymbolicPoly::weight() const {
    int w = -1;
    for (const auto& [m, c] : terms_) {
        int mw = 0;
        for (const auto& word : m) mw += word.weight();
        if (w == -1)
            w = mw;
        else if (w != mw)
            return -1;
    }
    return w;
}

SymbolicPoly embed(const LinComb& u) {
    SymbolicPoly p;
    for (const auto& [w, c] : u.terms()) p.add(ZMonomial{w}, c);
    return p;
}

LinComb expand_shuffle(const SymbolicPoly& p) {
    LinComb out;
    for (const auto& [m, c] : p.terms()) {
        LinComb acc(Word::one());
        for (const auto& w : m) acc = shuffle(acc, LinComb(w));
        out += c * acc;
    }
    return out;
}

Word zeta_word(int n) {
    Word w;
    for (int k = 1; k < n; ++k) w.push_back(Letter::a());
    w.push_back(Letter::b(0));
    return w;
}

SymTPolynomial rho_map(const TPolynomial& p) {
    const int deg = p.degree();
    SymTPolynomial out;
    if (deg < 0) return out;
    // A(u) = exp(sum_{n=2}^{deg} (-1)^n zeta(n) u^n / n), truncated at u^deg.
    std::vector<SymbolicPoly> g(static_cast<std::size_t>(deg) + 1);
    for (int n = 2; n <= deg; ++n)
        g[static_cast<std::size_t>(n)] =
            SymbolicPoly::z_value(zeta_word(n), Rational(n % 2 == 0 ? 1 : -1) / n);
    std::vector<SymbolicPoly> a(static_cast<std::size_t>(deg) + 1);
    a[0] = SymbolicPoly::constant(1);
    std::vector<SymbolicPoly> gk(static_cast<std::size_t>(deg) + 1);
    gk[0] = SymbolicPoly::constant(1);
    Rational kfact = 1;
    for (int k = 1; 2 * k <= deg; ++k) {
        std::vector<SymbolicPoly> next(static_cast<std::size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) {
            if (gk[static_cast<std::size_t>(i)].zero()) continue;
            for (int n = 2; i + n <= deg; ++n)
                next[static_cast<std::size_t>(i + n)] +=
                    gk[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(n)];
        }
        gk = std::move(next);
        kfact *= k;
        for (int i = 0; i <= deg; ++i)
            a[static_cast<std::size_t>(i)] += gk[static_cast<std::size_t>(i)] * (1 / kfact);
    }
    // rho(T^k) = k! sum_{m<=k} A_{k-m} T^m / m!
    std::vector<Rational> fact(static_cast<std::size_t>(deg) + 1);
    fact[0] = 1;
    for (int k = 1; k <= deg; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;
    for (int k = 0; k <= deg; ++k) {
        if (p.coeff(k).zero()) continue;
        const SymbolicPoly ck = embed(p.coeff(k));
        for (int m = 0; m <= k; ++m) {
            const SymbolicPoly& akm = a[static_cast<std::size_t>(k - m)];
            if (akm.zero()) continue;
            out.at(m) += (fact[static_cast<std::size_t>(k)] / fact[static_cast<std::size_t>(m)]) *
                         (akm * ck);
        }
    }
    return out;
}

} // namespace mpv
