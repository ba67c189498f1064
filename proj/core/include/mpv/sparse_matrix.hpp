#pragma once

#include <iosfwd>

#include "mpv/relation.hpp"

namespace mpv {

// Sparse rational row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Relation matrix over the canonical admissible-word column order.
struct SparseRationalMatrix {
    int cols = 0;
    std::vector<SparseRow> rows;

    void add_relation(const Relation& r, const std::map<Word, int>& column_of);
    void to_csv(std::ostream& os) const; // triplets "row,col,p/q"
};

std::map<Word, int> column_index(const std::vector<Word>& order);

// Incremental exact rank over Q.  Rows are scaled to primitive integer
// vectors; elimination pivots on the lowest column index with rows taken in
// arrival order, and every combination step strips the content GCD to keep
// coefficient growth down.
class RankReducer {
public:
    // Returns true when the row enlarged the row space.
    bool add_row(const SparseRow& row);
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    using IntRow = std::vector<std::pair<int, mpz_class>>;
    std::map<int, IntRow> pivots_; // lead column -> primitive reduced row
};

int rank(const SparseRationalMatrix& m);

} // namespace mpv
