#include "tlab/rsk.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tlab {

namespace {

void require_insertable(const SkewTableau& t, int x) {
    if (!t.shape.is_straight())
        throw std::invalid_argument("row insertion requires a straight tableau");
    if (x <= 0) throw std::invalid_argument("inserted entries must be positive");
    for (const auto& row : t.rows)
        if (std::binary_search(row.begin(), row.end(), x))
            throw std::invalid_argument("inserted entry already present");
}

// In-place insertion used by the hot paths; assumes preconditions hold.
void insert_into_rows(std::vector<std::vector<int>>& rows, int x, BumpingChain* chain) {
    size_t r = 0;
    while (true) {
        if (r == rows.size()) rows.emplace_back();
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            if (chain)
                chain->steps.push_back(
                    {static_cast<int>(r) + 1, static_cast<int>(row.size()), x});
            return;
        }
        int bumped = *it;
        *it = x;
        if (chain)
            chain->steps.push_back(
                {static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1, x});
        x = bumped;
        ++r;
    }
}

}  // namespace

InsertionResult row_insert(const SkewTableau& t, int x) {
    validate_tableau(t);
    require_insertable(t, x);
    InsertionResult res;
    auto rows = t.rows;
    insert_into_rows(rows, x, &res.chain);
    res.tableau = straight_tableau(std::move(rows));
    return res;
}

SkewTableau insert_word(const SkewTableau& t, const Word& w) {
    validate_tableau(t);
    if (!t.shape.is_straight())
        throw std::invalid_argument("row insertion requires a straight tableau");
    std::set<int> seen;
    for (const auto& row : t.rows) seen.insert(row.begin(), row.end());
    for (int x : w) {
        if (x <= 0) throw std::invalid_argument("inserted entries must be positive");
        if (!seen.insert(x).second) throw std::invalid_argument("inserted entry already present");
    }
    auto rows = t.rows;
    for (int x : w) insert_into_rows(rows, x, nullptr);
    return rows.empty() ? SkewTableau{} : straight_tableau(std::move(rows));
}

InsertionPair rsk(const Word& w) {
    std::set<int> seen;
    for (int x : w) {
        if (x <= 0) throw std::invalid_argument("letters must be positive");
        if (!seen.insert(x).second) throw std::invalid_argument("letters must be distinct");
    }
    std::vector<std::vector<int>> p, q;
    int step = 0;
    for (int x : w) {
        ++step;
        BumpingChain chain;
        insert_into_rows(p, x, &chain);
        size_t r = static_cast<size_t>(chain.new_cell().row - 1);
        if (r == q.size()) q.emplace_back();
        q[r].push_back(step);
    }
    InsertionPair out;
    if (!p.empty()) {
        out.p = straight_tableau(std::move(p));
        out.q = straight_tableau(std::move(q));
    }
    return out;
}

Word rsk_inverse(const SkewTableau& p, const SkewTableau& q) {
    validate_standard(p);
    validate_standard(q);
    if (!p.shape.is_straight() || !q.shape.is_straight())
        throw std::invalid_argument("inverse insertion requires straight tableaux");
    if (p.shape != q.shape) throw std::invalid_argument("tableaux must have the same shape");
    int n = static_cast<int>(p.size());
    std::vector<std::pair<int, int>> cell_of(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= q.row_count(); ++i)
        for (size_t j = 0; j < q.rows[static_cast<size_t>(i - 1)].size(); ++j)
            cell_of[static_cast<size_t>(q.rows[static_cast<size_t>(i - 1)][j])] = {i,
                                                                                   static_cast<int>(j)};
    auto rows = p.rows;
    Word w(static_cast<size_t>(n));
    for (int step = n; step >= 1; --step) {
        auto [r, c] = cell_of[static_cast<size_t>(step)];
        int x = rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)];
        rows[static_cast<size_t>(r - 1)].pop_back();
        for (int rr = r - 1; rr >= 1; --rr) {
            auto& row = rows[static_cast<size_t>(rr - 1)];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            // the entry that bumped x downward is the largest one below x
            --it;
            std::swap(*it, x);
        }
        w[static_cast<size_t>(step - 1)] = x;
    }
    return w;
}

namespace {

int best_total(const Word& w, int k) {
    // assign each position to one of k increasing subsequences or skip it;
    // branch and bound on the number of positions left
    int n = static_cast<int>(w.size());
    std::vector<int> last(static_cast<size_t>(k), 0);
    int best = 0;
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (used + (n - pos) <= best) return;
        if (pos == n) {
            best = std::max(best, used);
            return;
        }
        for (int j = 0; j < k; ++j) {
            if (w[static_cast<size_t>(pos)] > last[static_cast<size_t>(j)]) {
                int saved = last[static_cast<size_t>(j)];
                last[static_cast<size_t>(j)] = w[static_cast<size_t>(pos)];
                self(self, pos + 1, used + 1);
                last[static_cast<size_t>(j)] = saved;
            }
            // identical empty slots are interchangeable; trying one is enough
            if (last[static_cast<size_t>(j)] == 0) break;
        }
        self(self, pos + 1, used);
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

std::vector<int> greene_shape_oracle(const Word& w, int depth) {
    if (w.size() > 10) throw std::invalid_argument("oracle supports words of length at most 10");
    if (depth < 1 || depth > 4) throw std::invalid_argument("oracle depth must be between 1 and 4");
    std::set<int> seen;
    for (int x : w) {
        if (x <= 0) throw std::invalid_argument("letters must be positive");
        if (!seen.insert(x).second) throw std::invalid_argument("letters must be distinct");
    }
    std::vector<int> sums;
    for (int k = 1; k <= depth; ++k) sums.push_back(best_total(w, k));
    return sums;
}

}  // namespace tlab
