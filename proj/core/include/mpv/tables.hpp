#pragma once

#include <optional>

namespace mpv {

// Reference values transcribed from the published bound tables.  The table
// command diffs freshly computed values against these; the computation
// itself never reads them.
namespace tables {

// Weight-2 rows for levels 1..49.
std::optional<long long> sr2(int level);
std::optional<long long> dg2(int level);
std::optional<long long> kernel_dim(int level); // the k row; user-suppliable input
std::optional<long long> d2(int level);         // D - k

// Higher-weight rows: SR(3,N) for N <= 13, SR(4,N) for N <= 6,
// SR(5,N) for N <= 3, and D(w,N) for N <= 13.
std::optional<long long> sr(int weight, int level);
std::optional<long long> dg(int weight, int level);

int max_level(int weight); // largest level with a bundled SR entry

} // namespace tables

} // namespace mpv
