#include "tlab/tableau.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tlab {

bool operator<(const SkewTableau& a, const SkewTableau& b) {
    if (a.shape.outer.parts != b.shape.outer.parts) return a.shape.outer.parts < b.shape.outer.parts;
    if (a.shape.inner.parts != b.shape.inner.parts) return a.shape.inner.parts < b.shape.inner.parts;
    return a.rows < b.rows;
}

bool is_valid_shape(const SkewShape& s) {
    return is_valid_partition(s.outer) && is_valid_partition(s.inner) && contains(s.outer, s.inner);
}

void validate_shape(const SkewShape& s) {
    if (!is_valid_shape(s)) throw std::invalid_argument("inner/outer pair is not a skew shape");
}

bool is_valid_tableau(const SkewTableau& t) {
    if (!is_valid_shape(t.shape)) return false;
    if (static_cast<int>(t.rows.size()) != t.shape.rows()) return false;
    std::set<int> seen;
    for (int i = 1; i <= t.shape.rows(); ++i) {
        const auto& row = t.rows[static_cast<size_t>(i - 1)];
        if (static_cast<int>(row.size()) != t.shape.row_length(i)) return false;
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] <= 0) return false;
            if (j > 0 && row[j] <= row[j - 1]) return false;
            if (!seen.insert(row[j]).second) return false;
        }
    }
    // columns strictly increase between vertically adjacent cells
    for (int i = 1; i < t.shape.rows(); ++i) {
        int lo = std::max(t.shape.inner_at(i), t.shape.inner_at(i + 1));
        int hi = std::min(t.shape.outer_at(i), t.shape.outer_at(i + 1));
        for (int c = lo + 1; c <= hi; ++c) {
            int above = t.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(c - t.shape.inner_at(i) - 1)];
            int below = t.rows[static_cast<size_t>(i)][static_cast<size_t>(c - t.shape.inner_at(i + 1) - 1)];
            if (above >= below) return false;
        }
    }
    return true;
}

void validate_tableau(const SkewTableau& t) {
    if (!is_valid_tableau(t))
        throw std::invalid_argument("entries do not form a valid skew tableau: " + describe(t));
}

bool is_standard(const SkewTableau& t) {
    if (!is_valid_tableau(t)) return false;
    std::vector<int> all;
    for (const auto& row : t.rows) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) return false;
    return true;
}

void validate_standard(const SkewTableau& t) {
    validate_tableau(t);
    if (!is_standard(t))
        throw std::invalid_argument("tableau is not standard (entries must be exactly 1..n)");
}

SkewTableau make_tableau(SkewShape shape, std::vector<std::vector<int>> rows) {
    SkewTableau t{std::move(shape), std::move(rows)};
    validate_tableau(t);
    return t;
}

SkewTableau straight_tableau(std::vector<std::vector<int>> rows) {
    std::vector<int> outer;
    outer.reserve(rows.size());
    for (const auto& row : rows) outer.push_back(static_cast<int>(row.size()));
    return make_tableau(SkewShape{normalized_partition(std::move(outer)), Partition{}}, std::move(rows));
}

std::vector<int> row_vector(const SkewTableau& t) { return row_vector(t.shape); }

std::vector<int> row_vector(const SkewShape& s) {
    std::vector<int> rv;
    rv.reserve(static_cast<size_t>(s.rows()));
    for (int i = 1; i <= s.rows(); ++i) rv.push_back(s.row_length(i));
    return rv;
}

Word reading_word(const SkewTableau& t) {
    Word w;
    w.reserve(static_cast<size_t>(t.size()));
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::set<int> descent_set(const Word& w) {
    std::set<int> d;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
    return d;
}

std::set<int> descent_set(const SkewTableau& t) {
    validate_standard(t);
    std::vector<int> row_of(static_cast<size_t>(t.size()) + 1, 0);
    for (int i = 1; i <= t.row_count(); ++i)
        for (int e : t.rows[static_cast<size_t>(i - 1)]) row_of[static_cast<size_t>(e)] = i;
    std::set<int> d;
    for (int e = 1; e < static_cast<int>(t.size()); ++e)
        if (row_of[static_cast<size_t>(e + 1)] > row_of[static_cast<size_t>(e)]) d.insert(e);
    return d;
}

bool is_permutation_word(const Word& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int x : w) {
        if (x < 1 || x > static_cast<int>(w.size()) || seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = true;
    }
    return true;
}

SkewTableau conjugate(const SkewTableau& t) {
    validate_tableau(t);
    Partition outer = conjugate(t.shape.outer);
    Partition inner = conjugate(t.shape.inner);
    std::vector<std::vector<int>> cols(static_cast<size_t>(outer.rows()));
    for (int c = 1; c <= outer.rows(); ++c) {
        for (int i = 1; i <= t.shape.rows(); ++i) {
            if (c > t.shape.inner_at(i) && c <= t.shape.outer_at(i))
                cols[static_cast<size_t>(c - 1)].push_back(
                    t.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(c - t.shape.inner_at(i) - 1)]);
        }
    }
    return make_tableau(SkewShape{std::move(outer), std::move(inner)}, std::move(cols));
}

SkewTableau dagger(const SkewTableau& t) {
    validate_tableau(t);
    if (t.size() == 0) return SkewTableau{};
    int m = static_cast<int>(t.size());
    int b = t.row_count();
    int w = t.shape.outer_at(1);
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (int i = b; i >= 1; --i) {
        outer.push_back(w - t.shape.inner_at(i));
        inner.push_back(w - t.shape.outer_at(i));
        std::vector<int> row(t.rows[static_cast<size_t>(i - 1)].rbegin(),
                             t.rows[static_cast<size_t>(i - 1)].rend());
        for (int& x : row) x = m + 1 - x;
        rows.push_back(std::move(row));
    }
    while (!outer.empty() && outer.back() == 0) {
        outer.pop_back();
        rows.pop_back();
        if (inner.size() > outer.size()) inner.pop_back();
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return make_tableau(SkewShape{Partition{std::move(outer)}, Partition{std::move(inner)}},
                        std::move(rows));
}

SkewTableau shift_entries(const SkewTableau& t, int x) {
    SkewTableau out = t;
    for (auto& row : out.rows)
        for (int& e : row) {
            if (e + x <= 0) throw std::invalid_argument("entry shift would produce a non-positive entry");
            e += x;
        }
    return out;
}

std::vector<std::vector<int>> rows_in_range(const SkewTableau& t, int lo, int hi) {
    std::vector<std::vector<int>> out(t.rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (int e : t.rows[i])
            if (e >= lo && e <= hi) out[i].push_back(e);
    return out;
}

std::vector<int> row_counts_up_to(const SkewTableau& t, int bound) {
    std::vector<int> out(t.rows.size(), 0);
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (int e : t.rows[i])
            if (e <= bound) ++out[i];
    return out;
}

SkewTableau restrict_range(const SkewTableau& t, int lo, int hi) {
    validate_tableau(t);
    if (lo > hi) throw std::invalid_argument("restriction range is empty");
    int b = t.row_count();
    std::vector<int> outer(static_cast<size_t>(b), 0), inner(static_cast<size_t>(b), 0);
    std::vector<std::vector<int>> rows(static_cast<size_t>(b));
    for (int i = 1; i <= b; ++i) {
        const auto& row = t.rows[static_cast<size_t>(i - 1)];
        int before = 0;
        for (int e : row) {
            if (e < lo) ++before;
            if (e >= lo && e <= hi) rows[static_cast<size_t>(i - 1)].push_back(e);
        }
        inner[static_cast<size_t>(i - 1)] = t.shape.inner_at(i) + before;
        outer[static_cast<size_t>(i - 1)] =
            inner[static_cast<size_t>(i - 1)] + static_cast<int>(rows[static_cast<size_t>(i - 1)].size());
    }
    // give empty rows the widest placement allowed by the rows below
    int floor_col = 0;
    for (int i = b; i >= 1; --i) {
        size_t idx = static_cast<size_t>(i - 1);
        if (rows[idx].empty()) {
            outer[idx] = floor_col;
            inner[idx] = floor_col;
        } else {
            floor_col = outer[idx];
        }
    }
    int first = 0, last = b;
    while (first < b && rows[static_cast<size_t>(first)].empty()) ++first;
    while (last > first && rows[static_cast<size_t>(last - 1)].empty()) --last;
    if (first == last) return SkewTableau{};
    std::vector<int> o2(outer.begin() + first, outer.begin() + last);
    std::vector<int> i2(inner.begin() + first, inner.begin() + last);
    std::vector<std::vector<int>> r2(rows.begin() + first, rows.begin() + last);
    while (!i2.empty() && i2.back() == 0) i2.pop_back();
    SkewTableau out{SkewShape{Partition{std::move(o2)}, Partition{std::move(i2)}}, std::move(r2)};
    if (!is_valid_tableau(out))
        throw std::invalid_argument("selected entries do not form a skew shape");
    return out;
}

namespace {

std::vector<std::vector<int>> trimmed_contents(std::vector<std::vector<int>> rows) {
    size_t first = 0, last = rows.size();
    while (first < last && rows[first].empty()) ++first;
    while (last > first && rows[last - 1].empty()) --last;
    return {rows.begin() + static_cast<long>(first), rows.begin() + static_cast<long>(last)};
}

}  // namespace

bool row_shift_equivalent_rows(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b) {
    a = trimmed_contents(std::move(a));
    b = trimmed_contents(std::move(b));
    if (a.size() != b.size()) return false;
    int min_a = std::numeric_limits<int>::max(), min_b = std::numeric_limits<int>::max();
    for (const auto& row : a)
        for (int e : row) min_a = std::min(min_a, e);
    for (const auto& row : b)
        for (int e : row) min_b = std::min(min_b, e);
    if (min_a == std::numeric_limits<int>::max())
        return min_b == std::numeric_limits<int>::max();
    int shift = min_b - min_a;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] + shift != b[i][j]) return false;
    }
    return true;
}

bool row_shift_equivalent(const SkewTableau& a, const SkewTableau& b) {
    return row_shift_equivalent_rows(a.rows, b.rows);
}

SkewTableau antidiagonal_tableau(std::vector<std::vector<int>> rows_contents) {
    rows_contents = trimmed_contents(std::move(rows_contents));
    if (rows_contents.empty()) return SkewTableau{};
    int b = static_cast<int>(rows_contents.size());
    std::vector<int> outer(static_cast<size_t>(b)), inner(static_cast<size_t>(b));
    int below = 0;
    for (int i = b; i >= 1; --i) {
        size_t idx = static_cast<size_t>(i - 1);
        inner[idx] = below;
        below += static_cast<int>(rows_contents[idx].size());
        outer[idx] = below;
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return make_tableau(SkewShape{Partition{std::move(outer)}, Partition{std::move(inner)}},
                        std::move(rows_contents));
}

SkewTableau canonical_antidiagonal(const SkewTableau& t) { return antidiagonal_tableau(t.rows); }

SkewTableau permutation_tableau(const Word& w) {
    if (!is_permutation_word(w)) throw std::invalid_argument("word is not a permutation");
    std::vector<std::vector<int>> rows;
    rows.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) rows.push_back({*it});
    return antidiagonal_tableau(std::move(rows));
}

SkewTableau trim_empty_boundary_rows(const SkewTableau& t) {
    if (t.size() == 0) return SkewTableau{};
    int b = t.row_count();
    int first = 0, last = b;
    while (first < b && t.rows[static_cast<size_t>(first)].empty()) ++first;
    while (last > first && t.rows[static_cast<size_t>(last - 1)].empty()) --last;
    if (first == 0 && last == b) return t;
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (int i = first; i < last; ++i) {
        outer.push_back(t.shape.outer_at(i + 1));
        inner.push_back(t.shape.inner_at(i + 1));
        rows.push_back(t.rows[static_cast<size_t>(i)]);
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return make_tableau(SkewShape{Partition{std::move(outer)}, Partition{std::move(inner)}},
                        std::move(rows));
}

std::string describe(const SkewTableau& t) {
    std::ostringstream os;
    os << "[";
    // used in error messages, so tolerate a row list out of step with the shape
    for (int i = 1; i <= t.row_count(); ++i) {
        if (i > 1) os << " / ";
        for (int d = 0; d < t.shape.inner_at(i); ++d) os << ". ";
        if (i > static_cast<int>(t.rows.size())) {
            os << "?";
            continue;
        }
        const auto& row = t.rows[static_cast<size_t>(i - 1)];
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    }
    os << "]";
    return os.str();
}

}  // namespace tlab
