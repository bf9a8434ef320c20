#include "tlab/stabilize.hpp"

#include <algorithm>
#include <stdexcept>

#include "tlab/jdt.hpp"
#include "tlab/rsk.hpp"

namespace tlab {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

bool weakly_increasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1]) return false;
    return true;
}

int nonzero_rows(const std::vector<int>& v) {
    int n = 0;
    for (int x : v)
        if (x > 0) ++n;
    return n;
}

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

SkewTableau shifted_copies(const SkewTableau& s, int k) {
    validate_standard(s);
    if (k < 0) throw std::invalid_argument("copy count must be non-negative");
    std::vector<int> rv = row_vector(s);
    if (!weakly_decreasing(rv))
        throw std::invalid_argument("shifted copies require a weakly decreasing row vector");
    if (k == 0 || s.size() == 0) return SkewTableau{};
    int m = static_cast<int>(s.size());
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= s.row_count(); ++i) {
        inner.push_back(s.shape.inner_at(i));
        outer.push_back(s.shape.inner_at(i) + k * s.shape.row_length(i));
        std::vector<int> row;
        row.reserve(static_cast<size_t>(k) * s.rows[static_cast<size_t>(i - 1)].size());
        for (int j = 0; j < k; ++j)
            for (int e : s.rows[static_cast<size_t>(i - 1)]) row.push_back(e + j * m);
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

SkewTableau shifted_copies_left(const SkewTableau& s, int k) {
    validate_standard(s);
    if (k < 0) throw std::invalid_argument("copy count must be non-negative");
    std::vector<int> rv = row_vector(s);
    if (!weakly_increasing(rv))
        throw std::invalid_argument("left shifted copies require a weakly increasing row vector");
    if (k == 0 || s.size() == 0) return SkewTableau{};
    int m = static_cast<int>(s.size());
    int rmax = *std::max_element(rv.begin(), rv.end());
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= s.row_count(); ++i) {
        int r_i = s.shape.row_length(i);
        int off = s.shape.inner_at(i) + (k - 1) * (rmax - r_i);
        inner.push_back(off);
        outer.push_back(off + k * r_i);
        std::vector<int> row;
        row.reserve(static_cast<size_t>(k) * s.rows[static_cast<size_t>(i - 1)].size());
        for (int j = 0; j < k; ++j)
            for (int e : s.rows[static_cast<size_t>(i - 1)]) row.push_back(e + j * m);
        rows.push_back(std::move(row));
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return make_tableau(SkewShape{Partition{std::move(outer)}, Partition{std::move(inner)}},
                        std::move(rows));
}

StabResult stab(const SkewTableau& s) {
    validate_standard(s);
    std::vector<int> rv = row_vector(s);
    if (!weakly_decreasing(rv))
        throw std::invalid_argument("stabilization requires a weakly decreasing row vector");
    if (s.size() == 0) return StabResult{1, {}, 1};
    int m = static_cast<int>(s.size());
    int b = nonzero_rows(rv);
    int kmax = std::max(2 * b - 2, 1) + 2;

    // reading word of S^(kmax); its insertion tableau restricts to every
    // Rect(S^(k)) at once
    Word word;
    word.reserve(static_cast<size_t>(m) * static_cast<size_t>(kmax));
    for (int i = s.row_count(); i >= 1; --i)
        for (int j = 0; j < kmax; ++j)
            for (int e : s.rows[static_cast<size_t>(i - 1)]) word.push_back(e + j * m);
    SkewTableau p = insert_word(SkewTableau{}, word);

    std::vector<int> rv_full = trimmed(rv);
    std::vector<int> prev(p.rows.size(), 0);
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> cur = row_counts_up_to(p, k * m);
        bool match = true;
        for (size_t i = 0; i < cur.size() && match; ++i) {
            int want = i < rv_full.size() ? rv_full[i] : 0;
            if (cur[i] - prev[i] != want) match = false;
        }
        if (match) return StabResult{k, trimmed(std::move(cur)), kmax};
        prev = std::move(cur);
    }
    throw std::logic_error("stabilization index not found below the guaranteed bound");
}

StabResult stab_star(const SkewTableau& s) {
    validate_standard(s);
    std::vector<int> rv = row_vector(s);
    if (!weakly_increasing(rv))
        throw std::invalid_argument("anti-stabilization requires a weakly increasing row vector");
    if (s.size() == 0) return StabResult{1, {}, 1};
    int m = static_cast<int>(s.size());
    int b = nonzero_rows(rv);
    int kmax = std::max(2 * b - 2, 1) + 2;
    for (int k = 1; k <= kmax; ++k) {
        SkewTableau a = antirect(shifted_copies_left(s, k));
        if (row_shift_equivalent_rows(rows_in_range(a, 1, m), s.rows)) {
            std::vector<int> shape = row_vector(trim_empty_boundary_rows(a));
            return StabResult{k, std::move(shape), k};
        }
    }
    throw std::logic_error("anti-stabilization index not found below the guaranteed bound");
}

CStatistics c_stats(const SkewTableau& s) {
    validate_standard(s);
    std::vector<int> rv = trimmed(row_vector(s));
    if (rv.empty()) throw std::invalid_argument("overlap statistics require a non-empty tableau");
    int r = rv[0];
    for (int x : rv)
        if (x != r)
            throw std::invalid_argument("overlap statistics require a constant row vector");
    int b = static_cast<int>(rv.size());
    CStatistics out;
    out.b = b;
    out.r = r;
    for (int i = 1; i < b; ++i) {
        // rows counted from the bottom
        const auto& lower = s.rows[static_cast<size_t>(b - i)];
        const auto& upper = s.rows[static_cast<size_t>(b - i - 1)];
        Word w(lower.begin(), lower.end());
        w.insert(w.end(), upper.begin(), upper.end());
        SkewTableau p = insert_word(SkewTableau{}, w);
        int c = static_cast<int>(p.rows[0].size()) - r;
        if (c < 0 || c > r) throw std::logic_error("overlap statistic out of range");
        out.c.push_back(c);
    }
    return out;
}

long long gensum(const std::vector<int>& a, int m, int n) {
    auto check = [&](int lo, int hi) {
        if (lo < 1 || hi > static_cast<int>(a.size()))
            throw std::invalid_argument("generalized sum index out of bounds");
    };
    long long total = 0;
    if (m <= n) {
        check(m, n);
        for (int j = m; j <= n; ++j) total += a[static_cast<size_t>(j - 1)];
        return total;
    }
    if (m == n + 1) return 0;
    check(n + 1, m - 1);
    for (int j = n + 1; j <= m - 1; ++j) total -= a[static_cast<size_t>(j - 1)];
    return total;
}

Partition predicted_shape(const SkewTableau& s, int k) {
    CStatistics cs = c_stats(s);
    if (k < cs.b - 1) {
        int st = stab(s).stab;
        if (k < st - 1)
            throw std::invalid_argument("predicted shape needs k >= b-1 or k >= stab-1");
    }
    std::vector<int> parts;
    for (int j = 1; j <= cs.b; ++j) {
        long long part = static_cast<long long>(k) * cs.r + gensum(cs.c, j, cs.b - j);
        if (part < 0) throw std::logic_error("predicted row length is negative");
        parts.push_back(static_cast<int>(part));
    }
    return normalized_partition(std::move(parts));
}

SkewTableau tightness_instance(int b, int r) {
    if (b < 1 || r < 1) throw std::invalid_argument("tightness instance needs b, r >= 1");
    std::vector<std::vector<int>> rows;
    for (int i = b; i >= 1; --i) {
        std::vector<int> row;
        for (int j = 1; j <= r; ++j) row.push_back((i - 1) * r + j);
        rows.push_back(std::move(row));
    }
    return antidiagonal_tableau(std::move(rows));
}

}  // namespace tlab
