#pragma once

#include <vector>

#include "tlab/partition.hpp"
#include "tlab/tableau.hpp"

namespace tlab {

// S^(k): k-1 shifted copies of s attached to the right of s, copy j holding
// entries ((j-1)m, jm]. Requires a weakly decreasing row vector. k = 0 gives
// the empty tableau.
SkewTableau shifted_copies(const SkewTableau& s, int k);

// S^(*k): k-1 shifted copies attached to the left of s + (k-1)m, aligned so
// the rightmost block is a translate of s. Requires a weakly increasing row
// vector.
SkewTableau shifted_copies_left(const SkewTableau& s, int k);

struct StabResult {
    int stab = 0;
    std::vector<int> witness_shape;  // row vector of the rectification at k = stab
    int copies_examined = 0;
};

// Least k such that the restriction of Rect(S^(k)) to the top entry block is
// row-shift equivalent to s; evaluated through the row-vector increment
// criterion on a single rectification at the largest k examined.
StabResult stab(const SkewTableau& s);

// Least k such that Rect*(S^(*k)) restricted to the bottom entry block is
// row-shift equivalent to s.
StabResult stab_star(const SkewTableau& s);

struct CStatistics {
    int b = 0;
    int r = 0;
    std::vector<int> c;  // c_1..c_{b-1}
};

// For s with constant row vector (r^b): c_i is the overlap statistic of
// consecutive row words, first-row length of the insertion tableau of
// w_i w_{i+1} minus r (rows counted from the bottom).
CStatistics c_stats(const SkewTableau& s);

// Generalized interval sum over a 1-based sequence: empty when m = n+1 and
// the negated complementary sum when m > n+1.
long long gensum(const std::vector<int>& a, int m, int n);

// Row vector of Rect(S^(k)) predicted from the c statistics; valid once
// k >= b-1 (or k >= stab(s)-1). Trailing zero rows are dropped.
Partition predicted_shape(const SkewTableau& s, int k);

// Anti-diagonal tableau with b rows of r cells and increasing reading word:
// bottom row 1..r, the row above r+1..2r, and so on. Its stabilization
// index is exactly b, witnessing tightness of the row-count bound.
SkewTableau tightness_instance(int b, int r);

}  // namespace tlab
