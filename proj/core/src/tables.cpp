#include "mpv/tables.hpp"

#include <array>

namespace mpv {
namespace tables {

namespace {

// Levels 1..49.
constexpr std::array<long long, 49> kSR2 = {
    1,   2,   4,   4,   8,   8,   14,  10,  16,  16,  31,  18,  42,  27,  37,  31, 69,
    34,  85,  45,  68,  58,  122, 53,  116, 78,  109, 84,  190, 76,  216, 109, 158,
    127, 201, 108, 304, 156, 217, 151, 371, 141, 407, 198, 249, 223, 484, 183, 449};

constexpr std::array<long long, 49> kD2 = {
    1,  2,  4,  4,  9,   8,  16,  9,  16,  15, 36,  15, 49,  24,  35,  25, 81,
    24, 100, 35, 63, 48,  144, 35, 121, 63, 100, 63, 225, 47,  256, 81, 143,
    99, 195, 63, 361, 120, 195, 99, 441, 79, 484, 143, 195, 168, 576, 99, 484};

constexpr std::array<long long, 49> kK = {
    0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 5, 0, 7, 0, 0, 0, 12, 0, 15, 0, 0, 0, 22, 0, 5,
    0, 0, 0, 35, 0, 40, 0, 0, 0, 0, 0, 57, 0, 0, 0, 70, 0, 77, 0, 0, 0, 92, 0, 35};

constexpr std::array<long long, 13> kSR3 = {1, 3, 8, 9, 22, 23, 50, 38, 67, 70, 157, 94, 246};
constexpr std::array<long long, 13> kD3 = {1, 3, 8, 8, 27, 21, 64, 27, 64, 56, 216, 56, 343};
constexpr std::array<long long, 6> kSR4 = {1, 5, 16, 21, 61, 69};
constexpr std::array<long long, 13> kD4 = {1,   5,   16,  16,  81,  55,  256,
                                           81,  256, 209, 1296, 209, 2401};
constexpr std::array<long long, 3> kSR5 = {2, 8, 32};
constexpr std::array<long long, 13> kD5 = {2,    8,    32,  32,  243, 144, 1024,
                                           243,  1024, 780, 7776, 780, 16807};

template <std::size_t n>
std::optional<long long> pick(const std::array<long long, n>& a, int level) {
    if (level < 1 || level > static_cast<int>(n)) return std::nullopt;
    return a[static_cast<std::size_t>(level - 1)];
}

} // namespace

std::optional<long long> sr2(int level) { return pick(kSR2, level); }
std::optional<long long> dg2(int level) { return pick(kD2, level); }
std::optional<long long> kernel_dim(int level) { return pick(kK, level); }

std::optional<long long> d2(int level) {
    auto d = dg2(level);
    auto k = kernel_dim(level);
    if (!d || !k) return std::nullopt;
    return *d - *k;
}

std::optional<long long> sr(int weight, int level) {
    switch (weight) {
        case 2: return sr2(level);
        case 3: return pick(kSR3, level);
        case 4: return pick(kSR4, level);
        case 5: return pick(kSR5, level);
        default: return std::nullopt;
    }
}

std::optional<long long> dg(int weight, int level) {
    switch (weight) {
        case 2: return dg2(level);
        case 3: return pick(kD3, level);
        case 4: return pick(kD4, level);
        case 5: return pick(kD5, level);
        default: return std::nullopt;
    }
}

int max_level(int weight) {
    switch (weight) {
        case 2: return 49;
        case 3: return 13;
        case 4: return 6;
        case 5: return 3;
        default: return 0;
    }
}

} // namespace tables
} // namespace mpv
