#pragma once

#include <vector>

#include "tlab/tableau.hpp"

namespace tlab {

// One step of a bumping chain: the entry `moved` was bumped into (or created)
// the cell at (row, col), both 1-based, col absolute.
struct BumpStep {
    int row;
    int col;
    int moved;
    friend bool operator==(const BumpStep&, const BumpStep&) = default;
};

struct BumpingChain {
    std::vector<BumpStep> steps;
    BumpStep new_cell() const { return steps.back(); }
};

struct InsertionResult {
    SkewTableau tableau;
    BumpingChain chain;
};

// Row insertion of x into a straight tableau with strictly increasing rows
// and columns. x bumps the smallest entry greater than it.
InsertionResult row_insert(const SkewTableau& t, int x);

// Insert every letter of w in order.
SkewTableau insert_word(const SkewTableau& t, const Word& w);

struct InsertionPair {
    SkewTableau p;
    SkewTableau q;
};

// Row-insertion correspondence: p = insertion tableau, q = recording tableau.
InsertionPair rsk(const Word& w);

// Inverse of rsk on pairs of same-shape standard tableaux.
Word rsk_inverse(const SkewTableau& p, const SkewTableau& q);

// Exhaustive-search maxima of total lengths of j disjoint increasing
// subsequences of w, for j = 1..depth. Independent of the insertion
// algorithms above.
std::vector<int> greene_shape_oracle(const Word& w, int depth);

}  // namespace tlab
