#include "tlab/coreq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tlab {

namespace {

// Strip leading up-steps and trailing right-steps; they carry no cells.
std::vector<int> normalize_bits(std::vector<int> bits) {
    std::size_t lo = 0;
    while (lo < bits.size() && bits[lo] == 0) ++lo;
    std::size_t hi = bits.size();
    while (hi > lo && bits[hi - 1] == 1) --hi;
    return std::vector<int>(bits.begin() + static_cast<std::ptrdiff_t>(lo),
                            bits.begin() + static_cast<std::ptrdiff_t>(hi));
}

}  // namespace

BoundaryWord boundary_word(const Partition& p) {
    validate_partition(p);
    BoundaryWord w;
    int ell = p.rows();
    // From the bottom row up: lambda_ell right-steps, then one up-step per
    // row boundary, with the width increments in between.
    for (int i = ell; i >= 1; --i) {
        int run = p.at(i) - p.at(i + 1);
        if (i == ell) run = p.at(i);
        w.bits.insert(w.bits.end(), static_cast<std::size_t>(run), 1);
        w.bits.push_back(0);
    }
    w.bits = normalize_bits(std::move(w.bits));
    return w;
}

Partition partition_from_boundary(const BoundaryWord& w) {
    for (int b : w.bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("boundary word bits must be 0 or 1");
    }
    std::vector<int> bits = normalize_bits(w.bits);
    std::vector<int> rows_bottom_up;
    int ones = 0;
    for (int b : bits) {
        if (b == 1) {
            ++ones;
        } else {
            rows_bottom_up.push_back(ones);
        }
    }
    std::vector<int> parts(rows_bottom_up.rbegin(), rows_bottom_up.rend());
    return normalized_partition(parts);
}

QuotientDecomposition quotient(const Partition& p, int r) {
    if (r < 1) throw std::invalid_argument("quotient modulus must be positive");
    validate_partition(p);
    std::vector<int> bits = boundary_word(p).bits;
    int n = static_cast<int>(bits.size());

    QuotientDecomposition out;
    out.pieces.resize(static_cast<std::size_t>(r));
    std::vector<int> sorted_bits = bits;
    for (int j = 1; j <= r; ++j) {
        BoundaryWord cls;
        std::vector<int> positions;
        for (int q = j; q <= n; q += r) {
            cls.bits.push_back(bits[static_cast<std::size_t>(q - 1)]);
            positions.push_back(q - 1);
        }
        out.pieces[static_cast<std::size_t>(j - 1)] = partition_from_boundary(cls);
        // Core: within the class, every 0 moves as far left as it can.
        std::vector<int> sorted_cls = cls.bits;
        std::sort(sorted_cls.begin(), sorted_cls.end());
        for (std::size_t t = 0; t < positions.size(); ++t) {
            sorted_bits[static_cast<std::size_t>(positions[t])] = sorted_cls[t];
        }
    }
    out.core = partition_from_boundary(BoundaryWord{std::move(sorted_bits)});
    return out;
}

std::vector<Partition> rectangle_quotient(int a, int b, int r) {
    if (a < 1 || b < 1 || r < 1) throw std::invalid_argument("rectangle quotient needs positive a, b, r");
    int s = b % a;
    int hi = (b + a - 1) / a;  // ceil(b/a)
    int lo = b / a;
    std::vector<Partition> pieces;
    pieces.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) {
        int rows = i < s ? hi : lo;
        Partition piece;
        piece.parts.assign(static_cast<std::size_t>(rows), r);
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

bool empty_core_rectangle(int a, int b, int r) {
    if (a < 1 || b < 1 || r < 1) throw std::invalid_argument("rectangle core test needs positive a, b, r");
    if ((static_cast<long long>(a) * b) % r != 0) {
        throw std::invalid_argument("rectangle core test requires r to divide a*b");
    }
    return a % r == 0 || b % r == 0;
}

SkewShape antidiagonal_union(const std::vector<Partition>& pieces) {
    for (const Partition& p : pieces) validate_partition(p);
    // Column offset of piece i is the total width of the pieces southwest
    // of it; rows are emitted top to bottom, so northeast pieces first.
    std::vector<int> offsets(pieces.size(), 0);
    int off = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        offsets[i] = off;
        off += pieces[i].at(1);
    }
    SkewShape shape;
    for (std::size_t idx = pieces.size(); idx-- > 0;) {
        const Partition& p = pieces[idx];
        for (int row = 1; row <= p.rows(); ++row) {
            shape.outer.parts.push_back(offsets[idx] + p.at(row));
            shape.inner.parts.push_back(offsets[idx]);
        }
    }
    while (!shape.inner.parts.empty() && shape.inner.parts.back() == 0) shape.inner.parts.pop_back();
    validate_shape(shape);
    return shape;
}

}  // namespace tlab
