#pragma once

#include "mpv/lincomb.hpp"

namespace mpv {

// Shuffle product: the interleaving sum over (|u|,|v|)-shuffles, extended
// bilinearly.  Level-independent.
LinComb shuffle(const Word& u, const Word& v);
LinComb shuffle(const LinComb& u, const LinComb& v);

// Exponent shifting operator tau_j: y_{s,i} -> y_{s,i+j mod N}.
Word tau_shift(int j, const Word& w, const LevelContext& ctx);

// Stuffle product on A^1, defined by the recursion
//   y_{s,j} w1 * y_{t,k} w2 = y_{s,j} tau_j(tau_{-j}(w1) * y_{t,k} w2)
//                           + y_{t,k} tau_k(y_{s,j} w1 * tau_{-k}(w2))
//                           + y_{s+t,j+k} tau_{j+k}(tau_{-j}(w1) * tau_{-k}(w2))
// with the empty word as unit.  Throws if an operand leaves A^1.
LinComb stuffle(const Word& u, const Word& v, const LevelContext& ctx);
LinComb stuffle(const LinComb& u, const LinComb& v, const LevelContext& ctx);

// Drops both memo caches (tests use this to keep memory level).
void clear_product_caches();

} // namespace mpv
