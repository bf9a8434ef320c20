#pragma once

#include <utility>
#include <vector>

#include "tlab/tableau.hpp"

namespace tlab {

// Cells visited by a sliding hole, start and end included. Coordinates are
// 1-based (row, absolute column).
struct SlideTrace {
    std::pair<int, int> start;
    std::pair<int, int> end;
    std::vector<std::pair<int, int>> path;
};

struct SlideResult {
    SkewTableau tableau;
    SlideTrace trace;
};

// One inner slide starting from a removable cell of the inner shape. The
// hole repeatedly swaps with the smaller of its right/below neighbours.
SlideResult inner_slide(const SkewTableau& t, std::pair<int, int> corner);

enum class RectOrder {
    bottommost_first,  // canonical: slide at the lowest removable inner cell
    topmost_first,     // alternative order used to test slide independence
};

// Rectification: inner slides until the inner shape is empty.
SkewTableau rect(const SkewTableau& t);
SkewTableau rect_with_order(const SkewTableau& t, RectOrder order);

// Anti-rectification: outer slides inside the bounding rectangle until the
// filling is packed against its southeast corner. The result is reported
// right-justified with unused leading columns stripped; it keeps the input's
// row count, so rows at the top may be empty.
SkewTableau antirect(const SkewTableau& t);

// Erase 1, slide the hole to an outer corner, fill with n+1, decrement.
SkewTableau promote(const SkewTableau& t);
// Inverse on rectangles: erase n, slide to an inner corner, fill, increment.
SkewTableau demote(const SkewTableau& t);
// promote (k >= 0) or demote (k < 0) applied |k| times.
SkewTableau promote_power(const SkewTableau& t, int k);

// Evacuation of a straight standard tableau: records, in reverse, the order
// in which outer corners are vacated while the smallest entry is repeatedly
// removed and the rest is rectified.
SkewTableau evacuate(const SkewTableau& t);

// Elementary dual equivalence move: swaps the cells of i and one of i+-1
// when the third of {i-1, i, i+1} sits between them in reading order.
// Identity when i itself is the middle one.
SkewTableau dual_move(const SkewTableau& t, int i);

}  // namespace tlab
