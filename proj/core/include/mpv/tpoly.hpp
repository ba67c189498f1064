#pragma once

#include <vector>

#include "mpv/products.hpp"

namespace mpv {

enum class ProductKind { Shuffle, Stuffle };

// Polynomial in the regularization variable T with LinComb coefficients,
// every coefficient supported on admissible words only.
struct TPolynomial {
    std::vector<LinComb> coeffs; // coeffs[k] multiplies T^k

    int degree() const {
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            if (!coeffs[static_cast<std::size_t>(k)].zero()) return k;
        return -1; // zero polynomial
    }
    const LinComb& coeff(int k) const {
        static const LinComb zero;
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return zero;
        return coeffs[static_cast<std::size_t>(k)];
    }
    LinComb& at(int k) {
        if (k >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(k) + 1);
        return coeffs[static_cast<std::size_t>(k)];
    }
    void trim() {
        while (!coeffs.empty() && coeffs.back().zero()) coeffs.pop_back();
    }

    friend bool operator==(const TPolynomial& p, const TPolynomial& q) {
        int dp = p.degree(), dq = q.degree();
        if (dp != dq) return false;
        for (int k = 0; k <= dp; ++k)
            if (!(p.coeff(k) == q.coeff(k))) return false;
        return true;
    }
};

LinComb product(const LinComb& u, const LinComb& v, ProductKind kind, const LevelContext& ctx);

// The isomorphism A^1 = A^0[b_0] for the chosen product: expresses the
// operand as a polynomial in b_0 with admissible coefficients and maps
// b_0 to T.  Restricted to A^0 it is the identity in degree 0.
TPolynomial decompose(const LinComb& u, ProductKind kind, const LevelContext& ctx);

inline TPolynomial decompose_shuffle(const LinComb& u, const LevelContext& ctx) {
    return decompose(u, ProductKind::Shuffle, ctx);
}
inline TPolynomial decompose_stuffle(const LinComb& u, const LevelContext& ctx) {
    return decompose(u, ProductKind::Stuffle, ctx);
}

// Decompose, then evaluate at T = 0.
LinComb regularize(const LinComb& u, ProductKind kind, const LevelContext& ctx);

// T-polynomial multiplication, using the chosen product on coefficients.
TPolynomial tpoly_mul(const TPolynomial& p, const TPolynomial& q, ProductKind kind,
                      const LevelContext& ctx);

// Substitutes b_0 back for T and expands with the chosen product; inverse
// of decompose.
LinComb tpoly_reconstruct(const TPolynomial& p, ProductKind kind, const LevelContext& ctx);

} // namespace mpv
