#pragma once

#include <vector>

#include "tlab/partition.hpp"
#include "tlab/tableau.hpp"

namespace tlab {

// Boundary of a partition traced from southwest to northeast: 1 = step
// right, 0 = step up. Normalized: no leading 0s, no trailing 1s.
struct BoundaryWord {
    std::vector<int> bits;
    friend bool operator==(const BoundaryWord&, const BoundaryWord&) = default;
};

BoundaryWord boundary_word(const Partition& p);
Partition partition_from_boundary(const BoundaryWord& w);

struct QuotientDecomposition {
    std::vector<Partition> pieces;  // the r-quotient, position classes 1..r
    Partition core;                 // the r-core
};

// Splits the boundary word into 1-based position classes modulo r; the core
// sorts the 0s of each class as far left as they go.
QuotientDecomposition quotient(const Partition& p, int r);

// a-quotient of the rectangle ((ar)^b) in closed form: b mod a pieces of
// shape r^ceil(b/a), the rest r^floor(b/a).
std::vector<Partition> rectangle_quotient(int a, int b, int r);

// Whether the r-core of (a^b) is empty; requires r | ab.
bool empty_core_rectangle(int a, int b, int r);

// Anti-diagonal union: pieces listed southwest to northeast, touching only
// corner to corner.
SkewShape antidiagonal_union(const std::vector<Partition>& pieces);

}  // namespace tlab
