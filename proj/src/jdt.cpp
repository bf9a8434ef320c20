#include "tlab/jdt.hpp"

#include <algorithm>
#include <stdexcept>

namespace tlab {

namespace {

// Mutable working copy: lam/mu per row plus a dense cell grid (0 = empty).
struct Grid {
    int b = 0;
    int width = 0;
    std::vector<int> lam, mu;
    std::vector<std::vector<int>> cells;

    static Grid from(const SkewTableau& t) {
        Grid g;
        g.b = t.row_count();
        g.width = g.b > 0 ? t.shape.outer_at(1) : 0;
        g.lam.resize(static_cast<size_t>(g.b));
        g.mu.resize(static_cast<size_t>(g.b));
        g.cells.assign(static_cast<size_t>(g.b), std::vector<int>(static_cast<size_t>(g.width), 0));
        for (int i = 1; i <= g.b; ++i) {
            g.lam[static_cast<size_t>(i - 1)] = t.shape.outer_at(i);
            g.mu[static_cast<size_t>(i - 1)] = t.shape.inner_at(i);
            const auto& row = t.rows[static_cast<size_t>(i - 1)];
            for (size_t j = 0; j < row.size(); ++j)
                g.at(i, t.shape.inner_at(i) + static_cast<int>(j) + 1) = row[j];
        }
        return g;
    }

    int& at(int r, int c) { return cells[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }
    int get(int r, int c) const {
        return cells[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
    }
    int lam_at(int r) const { return (r >= 1 && r <= b) ? lam[static_cast<size_t>(r - 1)] : 0; }
    int mu_at(int r) const { return (r >= 1 && r <= b) ? mu[static_cast<size_t>(r - 1)] : 0; }

    bool in_shape(int r, int c) const {
        return r >= 1 && r <= b && c > mu_at(r) && c <= lam_at(r);
    }

    SkewTableau to_tableau(bool drop_empty_bottom) const {
        std::vector<int> outer, inner;
        std::vector<std::vector<int>> rows;
        int last = b;
        if (drop_empty_bottom)
            while (last > 0 && lam_at(last) == mu_at(last)) --last;
        for (int i = 1; i <= last; ++i) {
            outer.push_back(lam_at(i));
            inner.push_back(mu_at(i));
            std::vector<int> row;
            for (int c = mu_at(i) + 1; c <= lam_at(i); ++c) row.push_back(get(i, c));
            rows.push_back(std::move(row));
        }
        while (!inner.empty() && inner.back() == 0) inner.pop_back();
        if (outer.empty()) return SkewTableau{};
        return make_tableau(SkewShape{Partition{std::move(outer)}, Partition{std::move(inner)}},
                            std::move(rows));
    }

    // Hole at a removable inner cell migrates southeast by the minimum rule.
    // Returns the outer corner it stops at; the caller adjusts lam/mu.
    std::pair<int, int> slide_hole_southeast(int r, int c, std::vector<std::pair<int, int>>* path) {
        if (path) path->push_back({r, c});
        while (true) {
            bool right = in_shape(r, c + 1);
            bool below = in_shape(r + 1, c);
            if (!right && !below) return {r, c};
            bool take_right;
            if (right && below)
                take_right = get(r, c + 1) < get(r + 1, c);
            else
                take_right = right;
            if (take_right) {
                at(r, c) = get(r, c + 1);
                ++c;
            } else {
                at(r, c) = get(r + 1, c);
                ++r;
            }
            at(r, c) = 0;
            if (path) path->push_back({r, c});
        }
    }

    // Hole at an addable cell of lam migrates northwest by the maximum rule.
    std::pair<int, int> slide_hole_northwest(int r, int c) {
        while (true) {
            bool left = in_shape(r, c - 1);
            bool up = in_shape(r - 1, c);
            if (!left && !up) return {r, c};
            bool take_left;
            if (left && up)
                take_left = get(r, c - 1) > get(r - 1, c);
            else
                take_left = left;
            if (take_left) {
                at(r, c) = get(r, c - 1);
                --c;
            } else {
                at(r, c) = get(r - 1, c);
                --r;
            }
            at(r, c) = 0;
        }
    }

    void inner_slide_at(int row, std::vector<std::pair<int, int>>* path) {
        int c = mu_at(row);
        mu[static_cast<size_t>(row - 1)] -= 1;
        auto [er, ec] = slide_hole_southeast(row, c, path);
        lam[static_cast<size_t>(er - 1)] -= 1;
        at(er, ec) = 0;
    }

    bool inner_removable(int row) const {
        return mu_at(row) > 0 && mu_at(row) > mu_at(row + 1);
    }

    // Outer slide starting at the addable cell (row, lam_row + 1); ends by
    // adding a cell to mu.
    void outer_slide_at(int row) {
        int c = lam_at(row) + 1;
        lam[static_cast<size_t>(row - 1)] += 1;
        auto [er, ec] = slide_hole_northwest(row, c);
        mu[static_cast<size_t>(er - 1)] += 1;
        at(er, ec) = 0;
    }
};

}  // namespace

SlideResult inner_slide(const SkewTableau& t, std::pair<int, int> corner) {
    validate_tableau(t);
    auto [row, col] = corner;
    if (row < 1 || row > t.row_count() || col != t.shape.inner_at(row) ||
        !(col > 0 && col > t.shape.inner_at(row + 1)))
        throw std::invalid_argument("cell is not a removable inner corner");
    Grid g = Grid::from(t);
    SlideResult res;
    res.trace.start = corner;
    g.inner_slide_at(row, &res.trace.path);
    res.trace.end = res.trace.path.back();
    res.tableau = g.to_tableau(true);
    return res;
}

SkewTableau rect_with_order(const SkewTableau& t, RectOrder order) {
    validate_tableau(t);
    if (t.size() == 0) return SkewTableau{};
    Grid g = Grid::from(t);
    while (true) {
        int pick = 0;
        if (order == RectOrder::bottommost_first) {
            for (int i = g.b; i >= 1; --i)
                if (g.inner_removable(i)) {
                    pick = i;
                    break;
                }
        } else {
            for (int i = 1; i <= g.b; ++i)
                if (g.inner_removable(i)) {
                    pick = i;
                    break;
                }
        }
        if (pick == 0) break;
        g.inner_slide_at(pick, nullptr);
    }
    return g.to_tableau(true);
}

SkewTableau rect(const SkewTableau& t) { return rect_with_order(t, RectOrder::bottommost_first); }

SkewTableau antirect(const SkewTableau& t) {
    validate_tableau(t);
    if (t.size() == 0) return SkewTableau{};
    Grid g = Grid::from(t);
    int a = g.width;
    while (true) {
        int pick = 0;
        for (int i = 1; i <= g.b; ++i) {
            if (g.lam_at(i) < a && (i == 1 || g.lam_at(i - 1) > g.lam_at(i))) {
                pick = i;
                break;
            }
        }
        if (pick == 0) break;
        g.outer_slide_at(pick);
    }
    // right-justify at the width actually used
    int w = a - g.mu_at(g.b);
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= g.b; ++i) {
        std::vector<int> row;
        for (int c = g.mu_at(i) + 1; c <= a; ++c) row.push_back(g.get(i, c));
        outer.push_back(w);
        inner.push_back(w - static_cast<int>(row.size()));
        rows.push_back(std::move(row));
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return make_tableau(SkewShape{Partition{std::move(outer)}, Partition{std::move(inner)}},
                        std::move(rows));
}

SkewTableau promote(const SkewTableau& t) {
    validate_standard(t);
    if (t.size() == 0) return t;
    int n = static_cast<int>(t.size());
    Grid g = Grid::from(t);
    int r0 = 0, c0 = 0;
    for (int i = 1; i <= g.b && r0 == 0; ++i)
        for (int c = g.mu_at(i) + 1; c <= g.lam_at(i); ++c)
            if (g.get(i, c) == 1) {
                r0 = i;
                c0 = c;
                break;
            }
    g.at(r0, c0) = 0;
    auto [er, ec] = g.slide_hole_southeast(r0, c0, nullptr);
    g.at(er, ec) = n + 1;
    SkewTableau out = g.to_tableau(false);
    for (auto& row : out.rows)
        for (int& e : row) --e;
    validate_standard(out);
    return out;
}

SkewTableau demote(const SkewTableau& t) {
    validate_standard(t);
    if (t.size() == 0) return t;
    int n = static_cast<int>(t.size());
    Grid g = Grid::from(t);
    int r0 = 0, c0 = 0;
    for (int i = 1; i <= g.b && r0 == 0; ++i)
        for (int c = g.mu_at(i) + 1; c <= g.lam_at(i); ++c)
            if (g.get(i, c) == n) {
                r0 = i;
                c0 = c;
                break;
            }
    g.at(r0, c0) = 0;
    auto [er, ec] = g.slide_hole_northwest(r0, c0);
    // the vacated cell takes the new smallest entry once everything shifts up
    std::vector<std::vector<int>> rows(static_cast<size_t>(g.b));
    for (int i = 1; i <= g.b; ++i)
        for (int c = g.mu_at(i) + 1; c <= g.lam_at(i); ++c)
            rows[static_cast<size_t>(i - 1)].push_back(i == er && c == ec ? 1 : g.get(i, c) + 1);
    SkewTableau out = make_tableau(t.shape, std::move(rows));
    validate_standard(out);
    return out;
}

SkewTableau promote_power(const SkewTableau& t, int k) {
    SkewTableau out = t;
    for (int i = 0; i < std::abs(k); ++i) out = k > 0 ? promote(out) : demote(out);
    return out;
}

SkewTableau evacuate(const SkewTableau& t) {
    validate_standard(t);
    if (!t.shape.is_straight())
        throw std::invalid_argument("evacuation is defined for straight tableaux");
    if (t.size() == 0) return t;
    int n = static_cast<int>(t.size());
    Grid g = Grid::from(t);
    std::vector<std::vector<int>> out(t.rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i) out[i].resize(t.rows[i].size(), 0);
    for (int s = 1; s <= n; ++s) {
        g.at(1, 1) = 0;
        auto [er, ec] = g.slide_hole_southeast(1, 1, nullptr);
        g.lam[static_cast<size_t>(er - 1)] -= 1;
        g.at(er, ec) = 0;
        out[static_cast<size_t>(er - 1)][static_cast<size_t>(ec - 1)] = n + 1 - s;
    }
    return straight_tableau(std::move(out));
}

SkewTableau dual_move(const SkewTableau& t, int i) {
    validate_standard(t);
    int n = static_cast<int>(t.size());
    if (i <= 1 || i >= n)
        throw std::invalid_argument("dual move index must satisfy 1 < i < n");
    struct Pos {
        int row;
        int col;
        int value;
    };
    Pos pos[3];
    for (int v = i - 1; v <= i + 1; ++v) {
        for (int r = 1; r <= t.row_count(); ++r) {
            const auto& row = t.rows[static_cast<size_t>(r - 1)];
            for (size_t j = 0; j < row.size(); ++j) {
                if (row[j] == v)
                    pos[v - i + 1] = {r, t.shape.inner_at(r) + static_cast<int>(j) + 1, v};
            }
        }
    }
    // reading order: lower rows first, then left to right
    auto before = [](const Pos& x, const Pos& y) {
        return x.row != y.row ? x.row > y.row : x.col < y.col;
    };
    Pos order[3] = {pos[0], pos[1], pos[2]};
    std::sort(order, order + 3, before);
    int middle = order[1].value;
    if (middle == i) return t;
    int va = i;
    int vb = (middle == i - 1) ? i + 1 : i - 1;
    SkewTableau out = t;
    auto put = [&](const Pos& p, int v) {
        out.rows[static_cast<size_t>(p.row - 1)]
                [static_cast<size_t>(p.col - t.shape.inner_at(p.row) - 1)] = v;
    };
    put(pos[va - i + 1], vb);
    put(pos[vb - i + 1], va);
    validate_standard(out);
    return out;
}

}  // namespace tlab
