#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tlab/partition.hpp"

namespace tlab {

using Word = std::vector<int>;

// Skew shape outer/inner in English notation. Row i (1-based, top to bottom)
// holds the cells in columns (inner_i, outer_i]. Rows where inner_i = outer_i
// are empty but still part of the shape.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {}

    int rows() const { return outer.rows(); }
    int inner_at(int i) const { return inner.at(i); }
    int outer_at(int i) const { return outer.at(i); }
    int row_length(int i) const { return outer_at(i) - inner_at(i); }
    long long size() const { return outer.size() - inner.size(); }
    bool is_straight() const { return inner.empty(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// Filling of a skew shape. rows[i] lists the entries of row i+1 left to
// right, so the entry of rows[i][j] sits in absolute column inner_i + j + 1.
// Values are treated as immutable after construction.
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    int row_count() const { return shape.rows(); }
    long long size() const { return shape.size(); }
    bool empty() const { return size() == 0; }

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

bool operator<(const SkewTableau& a, const SkewTableau& b);

bool is_valid_shape(const SkewShape& s);
void validate_shape(const SkewShape& s);

// Full validity: shape valid, row sizes match, entries positive and distinct,
// rows and columns strictly increasing.
bool is_valid_tableau(const SkewTableau& t);
void validate_tableau(const SkewTableau& t);

// Valid and entries are exactly 1..n.
bool is_standard(const SkewTableau& t);
void validate_standard(const SkewTableau& t);

// Checked constructors.
SkewTableau make_tableau(SkewShape shape, std::vector<std::vector<int>> rows);
SkewTableau straight_tableau(std::vector<std::vector<int>> rows);

// Number of cells in each row, top to bottom (length = number of rows).
std::vector<int> row_vector(const SkewTableau& t);
std::vector<int> row_vector(const SkewShape& s);

// Rows read left to right, bottom row first.
Word reading_word(const SkewTableau& t);

// Descents of a word: i with w_i > w_{i+1}. Descents of a standard tableau:
// i such that i+1 sits in a strictly lower row than i.
std::set<int> descent_set(const Word& w);
std::set<int> descent_set(const SkewTableau& t);

bool is_permutation_word(const Word& w);

SkewTableau conjugate(const SkewTableau& t);

// 180-degree rotation with entries x -> m+1-x (m = size).
SkewTableau dagger(const SkewTableau& t);

// Same tableau with every entry shifted by x.
SkewTableau shift_entries(const SkewTableau& t, int x);

// Sub-tableau of entries in [lo, hi]. Signals if the selected cells do not
// form a skew shape. Empty boundary rows are trimmed.
SkewTableau restrict_range(const SkewTableau& t, int lo, int hi);

// Row contents of entries in [lo, hi], per host row, without shape checks.
std::vector<std::vector<int>> rows_in_range(const SkewTableau& t, int lo, int hi);

// Number of entries <= bound in each host row.
std::vector<int> row_counts_up_to(const SkewTableau& t, int bound);

// True iff some constant shift makes the two row-content sequences equal
// (leading/trailing empty rows ignored, interior empty rows significant).
bool row_shift_equivalent(const SkewTableau& a, const SkewTableau& b);
bool row_shift_equivalent_rows(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b);

// Canonical representative of a row-shift class: each row placed entirely
// left of the row above it, as in a chain of blocks touching corner to
// corner. rows_contents is listed top to bottom.
SkewTableau antidiagonal_tableau(std::vector<std::vector<int>> rows_contents);
SkewTableau canonical_antidiagonal(const SkewTableau& t);

// Anti-diagonal tableau whose reading word is w (single-cell rows).
SkewTableau permutation_tableau(const Word& w);

// Drops empty rows at the top and bottom (interior empty rows stay).
SkewTableau trim_empty_boundary_rows(const SkewTableau& t);

std::string describe(const SkewTableau& t);

}  // namespace tlab
