#include "mpv/tpoly.hpp"

namespace mpv {

namespace {

int leading_b0_count(const Word& w) {
    int d = 0;
    for (auto c : w.codes) {
        if (c != 1) break;
        ++d;
    }
    return d;
}

// b_0^{od} = b_0 o b_0 o ... o b_0 (d factors with the chosen product).
LinComb b0_power(int d, ProductKind kind, const LevelContext& ctx) {
    const Word b0{std::vector<std::uint8_t>{1}};
    LinComb p(b0);
    for (int k = 2; k <= d; ++k) p = product(p, LinComb(b0), kind, ctx);
    return p;
}

Rational factorial(int n) {
    Rational f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

LinComb product(const LinComb& u, const LinComb& v, ProductKind kind, const LevelContext& ctx) {
    return kind == ProductKind::Shuffle ? shuffle(u, v) : stuffle(u, v, ctx);
}

TPolynomial decompose(const LinComb& u, ProductKind kind, const LevelContext& ctx) {
    if (!u.in_a1())
        throw std::invalid_argument("decompose: operand not in A^1");
    TPolynomial result;
    LinComb work = u;
    // Strip the leading b_0 power of highest degree d: for a term c * b_0^d v
    // with v admissible, (1/d!) b_0^{od} o v reproduces it with exactly the
    // same degree-d head, so subtracting pushes everything below degree d.
    while (!work.zero()) {
        int d = 0;
        for (const auto& [w, c] : work.terms()) d = std::max(d, leading_b0_count(w));
        if (d == 0) {
            result.at(0) += work;
            break;
        }
        LinComb stripped;
        for (const auto& [w, c] : work.terms()) {
            if (leading_b0_count(w) != d) continue;
            Word v{std::vector<std::uint8_t>(w.codes.begin() + d, w.codes.end())};
            stripped.add(v, c);
        }
        const Rational inv_fact = 1 / factorial(d);
        result.at(d) += inv_fact * stripped;
        work -= inv_fact * product(b0_power(d, kind, ctx), stripped, kind, ctx);
    }
    result.trim();
    return result;
}

LinComb regularize(const LinComb& u, ProductKind kind, const LevelContext& ctx) {
    return decompose(u, kind, ctx).coeff(0);
}

TPolynomial tpoly_mul(const TPolynomial& p, const TPolynomial& q, ProductKind kind,
                      const LevelContext& ctx) {
    TPolynomial r;
    const int dp = p.degree(), dq = q.degree();
    for (int a = 0; a <= dp; ++a) {
        if (p.coeff(a).zero()) continue;
        for (int b = 0; b <= dq; ++b) {
            if (q.coeff(b).zero()) continue;
            r.at(a + b) += product(p.coeff(a), q.coeff(b), kind, ctx);
        }
    }
    r.trim();
    return r;
}

LinComb tpoly_reconstruct(const TPolynomial& p, ProductKind kind, const LevelContext& ctx) {
    LinComb out;
    const int d = p.degree();
    for (int k = 0; k <= d; ++k) {
        if (p.coeff(k).zero()) continue;
        if (k == 0) {
            out += p.coeff(0);
        } else {
            LinComb pk = b0_power(k, kind, ctx);
            out += (1 / factorial(k)) * product(pk, p.coeff(k), kind, ctx);
        }
    }
    return out;
}

} // namespace mpv
