#include "tlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tlab/coreq.hpp"
#include "tlab/fixed.hpp"
#include "tlab/jdt.hpp"
#include "tlab/rsk.hpp"
#include "tlab/stabilize.hpp"

namespace tlab {

namespace {

// Reference distribution of the stabilization statistic on S_1..S_8; row n
// entry k (1-based) counts words of length n stabilizing at k.
const std::vector<std::vector<long long>> k_stab_triangle = {
    {1},
    {1, 1},
    {1, 4, 1},
    {1, 8, 14, 1},
    {1, 18, 63, 37, 1},
    {1, 33, 175, 434, 76, 1},
    {1, 68, 549, 2345, 1927, 149, 1},
    {1, 124, 1787, 7807, 23760, 6552, 288, 1},
};

std::string row_text(const std::vector<long long>& row) {
    std::ostringstream os;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ' ';
        os << row[i];
    }
    return os.str();
}

std::string shape_text(const SkewShape& s) {
    std::ostringstream os;
    os << '(';
    for (int i = 1; i <= s.outer.rows(); ++i) {
        if (i > 1) os << ',';
        os << s.outer_at(i);
    }
    os << ")/(";
    for (int i = 1; i <= s.inner.rows(); ++i) {
        if (i > 1) os << ',';
        os << s.inner_at(i);
    }
    os << ')';
    return os.str();
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// All partitions with at most max_rows parts, each at most max_part,
// including the empty partition.
std::vector<Partition> partitions_in_box(int max_part, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto step = [&](auto&& self, int largest) -> void {
        out.push_back(normalized_partition(parts));
        if (static_cast<int>(parts.size()) == max_rows) return;
        for (int p = largest; p >= 1; --p) {
            parts.push_back(p);
            self(self, p);
            parts.pop_back();
        }
    };
    step(step, max_part);
    return out;
}

// All partitions contained in outer whose size differs from |outer| by at
// most max_diff (the complements are the skew shapes of interest).
std::vector<Partition> inners_within(const Partition& outer, long long max_diff) {
    std::vector<Partition> out;
    std::vector<int> parts(static_cast<std::size_t>(outer.rows()), 0);
    long long total = outer.size();
    auto step = [&](auto&& self, int row, long long kept) -> void {
        if (row > outer.rows()) {
            long long diff = total - kept;
            if (diff >= 1 && diff <= max_diff) {
                std::vector<int> p(parts.begin(), parts.begin() + outer.rows());
                out.push_back(normalized_partition(p));
            }
            return;
        }
        int hi = std::min(outer.at(row), row == 1 ? outer.at(1) : parts[static_cast<std::size_t>(row - 2)]);
        // Remaining rows cannot recover more than outer's tail, so prune.
        for (int v = 0; v <= hi; ++v) {
            parts[static_cast<std::size_t>(row - 1)] = v;
            self(self, row + 1, kept + v);
        }
        parts[static_cast<std::size_t>(row - 1)] = 0;
    };
    step(step, 1, 0);
    return out;
}

std::vector<SkewShape> skew_shapes_in_box(int box, int max_cells) {
    std::vector<SkewShape> shapes;
    for (const auto& outer : partitions_in_box(box, box)) {
        if (outer.empty()) continue;
        for (const auto& inner : inners_within(outer, max_cells)) {
            SkewShape s(outer, inner);
            if (is_valid_shape(s) && s.size() >= 1 && s.size() <= max_cells) shapes.push_back(s);
        }
    }
    return shapes;
}

// Anti-diagonal shape whose row vector, top to bottom, is rv.
SkewShape antidiagonal_shape(const std::vector<int>& rv) {
    std::vector<Partition> pieces;
    for (auto it = rv.rbegin(); it != rv.rend(); ++it) pieces.push_back(Partition{{*it}});
    return antidiagonal_union(pieces);
}

// Trim empty boundary rows and slide the filling left so the leftmost used
// column is column 1; used to compare right-justified fillings produced by
// different routes.
SkewTableau left_normalized(const SkewTableau& t) {
    SkewTableau u = trim_empty_boundary_rows(t);
    if (u.rows.empty()) return u;
    int shift = -1;
    for (int i = 1; i <= u.shape.rows(); ++i) {
        if (u.shape.row_length(i) == 0) continue;
        int lead = u.shape.inner_at(i);
        if (shift < 0 || lead < shift) shift = lead;
    }
    if (shift <= 0) return u;
    std::vector<int> out_parts, in_parts;
    for (int i = 1; i <= u.shape.rows(); ++i) {
        out_parts.push_back(u.shape.outer_at(i) - shift);
        in_parts.push_back(u.shape.inner_at(i) - shift);
    }
    return make_tableau(SkewShape(normalized_partition(out_parts), normalized_partition(in_parts)), u.rows);
}

std::vector<int> padded_rv(const SkewTableau& t, int rows) {
    std::vector<int> rv = row_vector(t);
    rv.resize(static_cast<std::size_t>(std::max<int>(rows, static_cast<int>(rv.size()))), 0);
    return rv;
}

std::set<SkewTableau> as_set(const std::vector<SkewTableau>& v) {
    return std::set<SkewTableau>(v.begin(), v.end());
}

CheckResult make_check(std::string name, bool pass, std::string detail) {
    return CheckResult{std::move(name), pass, std::move(detail)};
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<long long> reference_stab_row(int n) {
    if (n < 1 || n > static_cast<int>(k_stab_triangle.size())) return {};
    return k_stab_triangle[static_cast<std::size_t>(n - 1)];
}

std::vector<CheckResult> verify_stab_distribution(int max_n, int jobs) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<long long> row = stab_distribution(n, jobs);
        long long sum = std::accumulate(row.begin(), row.end(), 0LL);
        bool sum_ok = sum == factorial(n);

        if (n <= static_cast<int>(k_stab_triangle.size())) {
            const auto& ref = k_stab_triangle[static_cast<std::size_t>(n - 1)];
            bool match = row == ref;
            out.push_back(make_check("stab-dist-row-" + std::to_string(n), match && sum_ok,
                                     row_text(row) + (match ? "" : " (expected " + row_text(ref) + ")")));
        } else {
            out.push_back(make_check("stab-dist-row-" + std::to_string(n), sum_ok,
                                     row_text(row) + " (no reference row; sum checked)"));
        }

        if (n >= 2 && n <= 8) {
            std::vector<long long> direct = stab_distribution_direct(n);
            bool agree = direct == row;
            long long closed = stab2_count(n);
            bool two_ok = closed == direct[1];
            out.push_back(make_check("stab-direct-cross-" + std::to_string(n), agree,
                                     agree ? "class and direct enumerations agree"
                                           : "direct " + row_text(direct) + " vs class " + row_text(row)));
            out.push_back(make_check("stab2-closed-form-" + std::to_string(n), two_ok,
                                     "closed form " + std::to_string(closed) + ", brute force " +
                                         std::to_string(direct[1])));
        }

        Word identity(static_cast<std::size_t>(n));
        std::iota(identity.begin(), identity.end(), 1);
        bool max_ok = row[static_cast<std::size_t>(n - 1)] == 1 && stab_of_permutation(identity) == n;
        out.push_back(make_check("stab-max-only-identity-" + std::to_string(n), max_ok,
                                 "count at statistic " + std::to_string(n) + " is " +
                                     std::to_string(row[static_cast<std::size_t>(n - 1)])));
    }
    return out;
}

std::vector<CheckResult> verify_conjecture(int max_size, int jobs) {
    std::vector<CheckResult> out;
    for (int size = 1; size <= max_size; ++size) {
        std::vector<Partition> rvs = partitions_of(size);
        std::vector<std::string> violation(rvs.size());
        std::vector<long long> counted(rvs.size(), 0);
        parallel_for(static_cast<int>(rvs.size()), jobs, [&](int idx) {
            const Partition& rv = rvs[static_cast<std::size_t>(idx)];
            int b = rv.rows();
            int hard_bound = b == 1 ? 1 : 2 * b - 2;
            SkewShape shape = antidiagonal_shape(rv.parts);
            for_each_syt(shape, [&](const SkewTableau& t) {
                ++counted[static_cast<std::size_t>(idx)];
                int k = stab(t).stab;
                if (k > b)
                    violation[static_cast<std::size_t>(idx)] =
                        "stab " + std::to_string(k) + " > rows " + std::to_string(b) + " at " + describe(t);
                else if (k > hard_bound)
                    violation[static_cast<std::size_t>(idx)] =
                        "stab " + std::to_string(k) + " above proven bound at " + describe(t);
                return true;
            });
        });
        std::string bad;
        for (const auto& v : violation)
            if (!v.empty()) { bad = v; break; }
        long long total = std::accumulate(counted.begin(), counted.end(), 0LL);
        out.push_back(make_check("conjecture-size-" + std::to_string(size), bad.empty(),
                                 bad.empty() ? std::to_string(total) + " tableaux checked, bound holds" : bad));
    }
    return out;
}

std::vector<CheckResult> verify_csp(const std::vector<std::pair<int, int>>& shapes) {
    std::vector<CheckResult> out;
    for (auto [a, b] : shapes) {
        bool ok = true;
        std::ostringstream detail;
        for (int k = 0; k < a * b; ++k) {
            CspReport rep = csp_evaluate(a, b, k);
            bool match = rep.fixed_count == rep.poly_value && rep.residual < 1e-6;
            if (k) detail << ' ';
            detail << rep.fixed_count;
            if (!match) {
                ok = false;
                detail << "(!=" << rep.poly_value << ", residual " << rep.residual << ")";
            }
        }
        out.push_back(make_check("csp-" + std::to_string(a) + "x" + std::to_string(b), ok,
                                 "fixed counts by power: " + detail.str()));
    }
    return out;
}

namespace {

void check_ra_instance(std::vector<CheckResult>& out, int b, int r, int a) {
    std::string tag = std::to_string(b) + "-" + std::to_string(r) + "-" + std::to_string(a);
    std::vector<SkewTableau> domain = enumerate_syt(block_antidiagonal_shape(b, r));
    std::set<SkewTableau> built;
    bool equivariant = true;
    for (const auto& s : domain) {
        SkewTableau ra = construct_Ra(s, a);
        built.insert(ra);
        if (promote(ra) != construct_Ra(promote(s), a)) equivariant = false;
    }
    std::set<SkewTableau> brute = as_set(enumerate_fixed(a * r, b, b * r));
    long long expected = multinomial(b * r, std::vector<int>(static_cast<std::size_t>(b), r));
    bool complete = built == brute && static_cast<long long>(built.size()) == expected &&
                    built.size() == domain.size();
    out.push_back(make_check("ra-completeness-" + tag, complete,
                             std::to_string(built.size()) + " constructed, " + std::to_string(brute.size()) +
                                 " by brute force, expected " + std::to_string(expected)));
    out.push_back(make_check("ra-equivariance-" + tag, equivariant,
                             "promotion through the construction on " + std::to_string(domain.size()) +
                                 " inputs"));
}

void check_r2_instance(std::vector<CheckResult>& out, int b, int r) {
    std::string tag = std::to_string(b) + "-" + std::to_string(r);
    std::vector<SkewTableau> domain = enumerate_syt(two_block_shape(b, r));
    std::set<SkewTableau> built;
    bool equivariant = true;
    for (const auto& s : domain) {
        SkewTableau r2 = construct_R2(s);
        built.insert(r2);
        if (promote(r2) != construct_R2(promote(s))) equivariant = false;
    }
    std::set<SkewTableau> brute = as_set(enumerate_fixed(2 * r, b, b * r));
    Partition tall = two_block_pieces(b, r)[0];
    Partition flat = two_block_pieces(b, r)[1];
    long long expected = binomial(b * r, (b / 2) * r) * hook_count(tall) * hook_count(flat);
    bool complete = built == brute && static_cast<long long>(built.size()) == expected &&
                    built.size() == domain.size();
    out.push_back(make_check("r2-completeness-" + tag, complete,
                             std::to_string(built.size()) + " constructed, " + std::to_string(brute.size()) +
                                 " by brute force, expected " + std::to_string(expected)));
    out.push_back(make_check("r2-equivariance-" + tag, equivariant,
                             "promotion through the two-copy construction on " +
                                 std::to_string(domain.size()) + " inputs"));
}

void check_block_instance(std::vector<CheckResult>& out) {
    std::vector<Partition> pieces = {Partition{{3, 3}}, Partition{{2, 2}}};
    std::set<SkewTableau> block = as_set(block_fixed_points(pieces, 2));
    std::set<SkewTableau> brute;
    for_each_syt(antidiagonal_union(pieces), [&](const SkewTableau& t) {
        if (promote_power(t, 5) == t) brute.insert(t);
        return true;
    });
    SkewTableau member = make_tableau(SkewShape(Partition{{5, 5, 3, 3}}, Partition{{3, 3}}),
                                      {{2, 7}, {3, 8}, {1, 4, 9}, {5, 6, 10}});
    SkewTableau assembled = construct_R2(member);
    SkewTableau expected_r2 = straight_tableau({{1, 2, 7, 12, 17},
                                                {3, 6, 8, 13, 18},
                                                {4, 9, 11, 14, 19},
                                                {5, 10, 15, 16, 20}});
    bool ok = block == brute && block.count(member) == 1 && assembled == expected_r2 &&
              promote_power(assembled, 5) == assembled;
    out.push_back(make_check("block-pinned-instance", ok,
                             std::to_string(block.size()) + " blockwise vs " + std::to_string(brute.size()) +
                                 " brute force; pinned member and its two-copy image checked"));
}

void check_block_sweep(std::vector<CheckResult>& out, int max_total) {
    long long cases = 0;
    std::string bad;
    for (int total = 2; total <= max_total && bad.empty(); ++total) {
        for (int s1 = 1; s1 < total && bad.empty(); ++s1) {
            for (const auto& p1 : partitions_of(s1)) {
                for (const auto& p2 : partitions_of(total - s1)) {
                    std::vector<Partition> pieces = {p1, p2};
                    SkewShape shape = antidiagonal_union(pieces);
                    for (int k = 1; k <= total; ++k) {
                        if (total % k != 0) continue;
                        int power = total / k;
                        std::set<SkewTableau> brute;
                        for_each_syt(shape, [&](const SkewTableau& t) {
                            if (promote_power(t, power) == t) brute.insert(t);
                            return true;
                        });
                        std::set<SkewTableau> block = as_set(block_fixed_points(pieces, k));
                        ++cases;
                        if (block != brute) {
                            bad = "mismatch at pieces " + shape_text(shape) + " k=" + std::to_string(k) +
                                  ": " + std::to_string(block.size()) + " vs " + std::to_string(brute.size());
                            break;
                        }
                    }
                    if (!bad.empty()) break;
                }
                if (!bad.empty()) break;
            }
        }
    }
    out.push_back(make_check("block-two-piece-sweep", bad.empty(),
                             bad.empty() ? std::to_string(cases) + " piece/divisor cases agree" : bad));
}

void check_r2_within(std::vector<CheckResult>& out, int b, int r) {
    std::string tag = std::to_string(b) + "-" + std::to_string(r);
    std::vector<Partition> pieces = two_block_pieces(b, r);
    bool ok = true;
    std::ostringstream detail;
    for (int k = 1; k <= b * r; ++k) {
        if ((b * r) % k != 0) continue;
        std::set<SkewTableau> via_blocks;
        for (const auto& u : block_fixed_points(pieces, k)) via_blocks.insert(construct_R2(u));
        long long g1 = pieces[0].size(), g2 = pieces[1].size();
        bool divides = g1 % k == 0 && g2 % k == 0;
        std::set<SkewTableau> brute = as_set(enumerate_fixed(2 * r, b, (b * r) / k));
        if (!divides && !via_blocks.empty()) ok = false;
        if (divides && via_blocks != brute) ok = false;
        if (!divides && !brute.empty()) ok = false;
        detail << " k=" << k << ":" << brute.size();
    }
    out.push_back(make_check("r2-prfixed-within-" + tag, ok, "fixed counts by divisor:" + detail.str()));
}

void check_symrect(std::vector<CheckResult>& out, int b, int r) {
    std::string tag = std::to_string(b) + "-" + std::to_string(r);
    std::set<SkewTableau> images;
    std::vector<SkewTableau> domain = enumerate_syt(two_block_shape(b, r));
    for (const auto& s : domain) images.insert(rect(s));
    std::set<SkewTableau> expected;
    for (const auto& nu : partitions_of(b * r)) {
        if (nu.rows() > b) continue;
        bool symmetric = true;
        for (int j = 1; j <= b; ++j)
            if (nu.at(j) + nu.at(b + 1 - j) != 2 * r) symmetric = false;
        if (!symmetric) continue;
        for (const auto& t : enumerate_syt(SkewShape(nu, Partition{})))
            expected.insert(t);
    }
    bool ok = images == expected && images.size() == domain.size();
    out.push_back(make_check("symrect-bijection-" + tag, ok,
                             std::to_string(images.size()) + " rectifications cover " +
                                 std::to_string(expected.size()) + " symmetric-shape tableaux"));
}

void check_lr_fibers(std::vector<CheckResult>& out, int b) {
    int a = 2 * b - 1;
    SkewShape beta = block_antidiagonal_shape(b, 1);
    std::map<SkewTableau, long long> fibers;
    for (const auto& t : enumerate_fixed(a, b, b)) ++fibers[restrict_range(t, 1, b)];
    bool ok = true;
    for (const auto& nu : partitions_of(b)) {
        long long coeff = lr_coefficient(beta.outer, beta.inner, nu);
        for (const auto& t0 : enumerate_syt(SkewShape(nu, Partition{}))) {
            auto it = fibers.find(t0);
            long long got = it == fibers.end() ? 0 : it->second;
            if (got != coeff) ok = false;
        }
    }
    out.push_back(make_check("lr-fibers-" + std::to_string(b), ok,
                             "restriction fibers match the coefficient on all anchors"));
}

}  // namespace

std::vector<CheckResult> verify_fixed_points() {
    std::vector<CheckResult> out;
    check_ra_instance(out, 2, 1, 3);
    check_ra_instance(out, 2, 1, 4);
    check_ra_instance(out, 2, 2, 3);
    check_ra_instance(out, 3, 1, 5);
    check_r2_instance(out, 2, 1);
    check_r2_instance(out, 3, 1);
    check_r2_instance(out, 2, 2);
    check_r2_instance(out, 4, 1);
    check_block_instance(out);
    check_block_sweep(out, 8);
    const std::vector<std::pair<int, int>> gamma_cases = {{2, 1}, {3, 1}, {4, 1}, {5, 1},
                                                          {6, 1}, {2, 2}, {3, 2}, {2, 3}};
    for (auto [b, r] : gamma_cases) check_r2_within(out, b, r);
    for (auto [b, r] : gamma_cases) check_symrect(out, b, r);
    check_lr_fibers(out, 2);
    check_lr_fibers(out, 3);
    return out;
}

namespace {

void prop_rect_routes(std::vector<CheckResult>& out) {
    std::string bad;
    long long tableaux = 0;
    for (const auto& shape : skew_shapes_in_box(6, 6)) {
        for_each_syt(shape, [&](const SkewTableau& t) {
            ++tableaux;
            SkewTableau bottom = rect_with_order(t, RectOrder::bottommost_first);
            SkewTableau top = rect_with_order(t, RectOrder::topmost_first);
            SkewTableau ins = rsk(reading_word(t)).p;
            if (bottom != top)
                bad = "slide orders disagree at " + describe(t);
            else if (bottom != ins)
                bad = "rectification differs from insertion at " + describe(t);
            return bad.empty();
        });
        if (!bad.empty()) break;
    }
    out.push_back(make_check("prop-rect-routes", bad.empty(),
                             bad.empty() ? std::to_string(tableaux) + " tableaux, both slide orders = insertion"
                                         : bad));
}

void prop_antirect_flip(std::vector<CheckResult>& out) {
    std::string bad;
    long long tableaux = 0;
    for (const auto& shape : skew_shapes_in_box(5, 5)) {
        for_each_syt(shape, [&](const SkewTableau& t) {
            ++tableaux;
            SkewTableau direct = left_normalized(antirect(t));
            SkewTableau flipped = left_normalized(dagger(rect(dagger(t))));
            SkewTableau evac = left_normalized(dagger(evacuate(rect(t))));
            if (direct != flipped)
                bad = "antirectification differs from flip route at " + describe(t);
            else if (direct != evac)
                bad = "antirectification differs from evacuation route at " + describe(t);
            return bad.empty();
        });
        if (!bad.empty()) break;
    }
    out.push_back(make_check("prop-antirect-flip", bad.empty(),
                             bad.empty() ? std::to_string(tableaux) + " tableaux on three routes" : bad));
}

void prop_greene(std::vector<CheckResult>& out, unsigned seed) {
    std::mt19937 rng(seed);
    std::string bad;
    long long words = 0;
    auto check_word = [&](const Word& w) {
        SkewTableau p = rsk(w).p;
        std::vector<int> rv = row_vector(p);
        std::vector<int> oracle = greene_shape_oracle(w, 4);
        long long partial = 0;
        for (std::size_t j = 0; j < oracle.size(); ++j) {
            partial += j < rv.size() ? rv[j] : 0;
            if (oracle[j] != partial) {
                std::ostringstream os;
                os << "increasing-subsequence maxima disagree with insertion shape for word";
                for (int x : w) os << ' ' << x;
                bad = os.str();
                return;
            }
        }
        ++words;
    };
    for (int n = 1; n <= 5 && bad.empty(); ++n) {
        Word w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do check_word(w);
        while (bad.empty() && std::next_permutation(w.begin(), w.end()));
    }
    for (int trial = 0; trial < 300 && bad.empty(); ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        std::vector<int> pool(30);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        Word w(pool.begin(), pool.begin() + n);
        check_word(w);
    }
    out.push_back(make_check("prop-greene-oracle", bad.empty(),
                             bad.empty() ? std::to_string(words) + " words vs branch-and-bound maxima" : bad));
}

void prop_descents(std::vector<CheckResult>& out) {
    std::string bad;
    long long words = 0;
    for (int n = 1; n <= 6 && bad.empty(); ++n) {
        Word w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
            ++words;
            if (descent_set(w) != descent_set(rsk(w).q)) {
                std::ostringstream os;
                os << "descents differ from recording tableau for";
                for (int x : w) os << ' ' << x;
                bad = os.str();
            }
        } while (bad.empty() && std::next_permutation(w.begin(), w.end()));
    }
    out.push_back(make_check("prop-descents-recording", bad.empty(),
                             bad.empty() ? std::to_string(words) + " permutations" : bad));
}

void prop_evacuation(std::vector<CheckResult>& out) {
    std::string bad;
    long long tableaux = 0;
    for (int n = 1; n <= 6 && bad.empty(); ++n) {
        for (const auto& lam : partitions_of(n)) {
            for_each_syt(SkewShape(lam, Partition{}), [&](const SkewTableau& t) {
                ++tableaux;
                if (evacuate(evacuate(t)) != t) bad = "not an involution at " + describe(t);
                return bad.empty();
            });
            if (!bad.empty()) break;
        }
    }
    out.push_back(make_check("prop-evacuation-involution", bad.empty(),
                             bad.empty() ? std::to_string(tableaux) + " straight tableaux" : bad));
}

void prop_promotion_order(std::vector<CheckResult>& out) {
    std::string bad;
    long long tableaux = 0;
    for (int a = 1; a <= 10 && bad.empty(); ++a) {
        for (int b = 1; a * b <= 10 && bad.empty(); ++b) {
            Partition rectangle{std::vector<int>(static_cast<std::size_t>(b), a)};
            for_each_syt(SkewShape(rectangle, Partition{}), [&](const SkewTableau& t) {
                ++tableaux;
                if (promote_power(t, a * b) != t)
                    bad = "promotion power " + std::to_string(a * b) + " not identity at " + describe(t);
                else if (demote(promote(t)) != t)
                    bad = "demotion does not invert promotion at " + describe(t);
                return bad.empty();
            });
        }
    }
    out.push_back(make_check("prop-promotion-order", bad.empty(),
                             bad.empty() ? std::to_string(tableaux) + " rectangular tableaux" : bad));
}

void prop_promotion_shape(std::vector<CheckResult>& out) {
    std::string bad;
    long long tableaux = 0;
    for (const auto& shape : skew_shapes_in_box(4, 5)) {
        for_each_syt(shape, [&](const SkewTableau& t) {
            ++tableaux;
            if (promote(t).shape != t.shape) bad = "promotion changed the shape at " + describe(t);
            return bad.empty();
        });
        if (!bad.empty()) break;
    }
    out.push_back(make_check("prop-promotion-shape", bad.empty(),
                             bad.empty() ? std::to_string(tableaux) + " skew tableaux keep their shape" : bad));
}

void prop_dual_moves(std::vector<CheckResult>& out) {
    std::string bad;
    long long moves = 0;
    for (int n = 2; n <= 6 && bad.empty(); ++n) {
        Word w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        do {
            SkewTableau t = permutation_tableau(w);
            int base = stab(t).stab;
            SkewTableau q = rsk(w).q;
            for (int i = 2; i < n && bad.empty(); ++i) {
                SkewTableau moved = dual_move(t, i);
                ++moves;
                if (dual_move(moved, i) != t) {
                    bad = "move " + std::to_string(i) + " is not an involution at " + describe(t);
                } else if (stab(moved).stab != base) {
                    bad = "stabilization changed under move " + std::to_string(i) + " at " + describe(t);
                } else if (rsk(reading_word(moved)).q != q) {
                    bad = "recording tableau changed under move " + std::to_string(i) + " at " + describe(t);
                } else if (n <= 5 && rect(moved) != dual_move(rect(t), i)) {
                    bad = "move " + std::to_string(i) + " does not commute with rectification at " +
                          describe(t);
                }
            }
        } while (bad.empty() && std::next_permutation(w.begin(), w.end()));
    }
    out.push_back(make_check("prop-dual-moves", bad.empty(),
                             bad.empty() ? std::to_string(moves) + " elementary moves" : bad));
}

void prop_stab_star(std::vector<CheckResult>& out) {
    std::string bad;
    long long tableaux = 0;
    for (int b = 1; b <= 6 && bad.empty(); ++b) {
        for (int r = 1; b * r <= 6 && bad.empty(); ++r) {
            for_each_syt(block_antidiagonal_shape(b, r), [&](const SkewTableau& t) {
                ++tableaux;
                if (stab_star(t).stab != stab(t).stab)
                    bad = "left and right stabilization differ at " + describe(t);
                return bad.empty();
            });
        }
    }
    out.push_back(make_check("prop-stab-star", bad.empty(),
                             bad.empty() ? std::to_string(tableaux) + " constant-row-vector tableaux" : bad));
}

void prop_stab_persistence(std::vector<CheckResult>& out) {
    std::string bad;
    long long checks = 0;
    for (int b = 1; b <= 6 && bad.empty(); ++b) {
        for (int r = 1; b * r <= 6 && bad.empty(); ++r) {
            int m = b * r;
            for_each_syt(block_antidiagonal_shape(b, r), [&](const SkewTableau& t) {
                int k = stab(t).stab;
                for (int kk = k; kk <= k + 2; ++kk) {
                    ++checks;
                    SkewTableau r1 = rect(shifted_copies(t, kk));
                    if (!row_shift_equivalent_rows(rows_in_range(r1, (kk - 1) * m + 1, kk * m), t.rows)) {
                        bad = "stabilization does not persist at copies " + std::to_string(kk) + " for " +
                              describe(t);
                        break;
                    }
                }
                return bad.empty();
            });
        }
    }
    out.push_back(make_check("prop-stab-persistence", bad.empty(),
                             bad.empty() ? std::to_string(checks) + " copy counts at or above the index" : bad));
}

void prop_left_right_copies(std::vector<CheckResult>& out) {
    std::string bad;
    long long checks = 0;
    for (int b = 1; b <= 5 && bad.empty(); ++b) {
        for (int r = 1; b * r <= 6 && bad.empty(); ++r) {
            for_each_syt(block_antidiagonal_shape(b, r), [&](const SkewTableau& t) {
                for (int k = 1; k <= 3 && bad.empty(); ++k) {
                    ++checks;
                    SkewTableau right = shifted_copies(t, k);
                    SkewTableau left = shifted_copies_left(t, k);
                    if (!row_shift_equivalent(left, right))
                        bad = "left and right copies not row-shift equivalent at " + describe(t);
                    else if (rect(left) != rect(right))
                        bad = "left and right copies rectify differently at " + describe(t);
                    else if (left_normalized(antirect(left)) != left_normalized(antirect(right)))
                        bad = "left and right copies anti-rectify differently at " + describe(t);
                    else {
                        std::vector<int> fwd = padded_rv(rect(right), b);
                        std::vector<int> rev = padded_rv(antirect(right), b);
                        for (int j = 1; j <= b; ++j) {
                            if (rev[static_cast<std::size_t>(j - 1)] !=
                                fwd[static_cast<std::size_t>(b - j)]) {
                                bad = "anti-rectified row vector is not the reversal at " + describe(t);
                                break;
                            }
                        }
                    }
                }
                return bad.empty();
            });
        }
    }
    out.push_back(make_check("prop-left-right-copies", bad.empty(),
                             bad.empty() ? std::to_string(checks) + " copy comparisons" : bad));
}

void prop_row_shift_arrangements(std::vector<CheckResult>& out) {
    // Fixed row contents, every legal horizontal arrangement: all mutually
    // row-shift equivalent with equal stabilization and rectification.
    std::vector<std::vector<std::vector<int>>> instances = {
        {{1, 3}, {5, 6}, {2, 4}},
        {{2}, {3}, {1}, {4}},
        {{4, 5, 6}, {3, 7}, {1, 2}},
    };
    std::string bad;
    long long arrangements = 0;
    for (const auto& rows : instances) {
        int b = static_cast<int>(rows.size());
        int width = 0;
        for (const auto& row : rows) width += static_cast<int>(row.size());
        std::vector<SkewTableau> found;
        std::vector<int> offset(static_cast<std::size_t>(b), 0);
        auto place = [&](auto&& self, int i) -> void {
            if (i == b) {
                std::vector<int> outer_parts, inner_parts;
                for (int j = 0; j < b; ++j) {
                    inner_parts.push_back(offset[static_cast<std::size_t>(j)]);
                    outer_parts.push_back(offset[static_cast<std::size_t>(j)] +
                                          static_cast<int>(rows[static_cast<std::size_t>(j)].size()));
                }
                SkewShape shape(normalized_partition(outer_parts), normalized_partition(inner_parts));
                if (!is_valid_shape(shape)) return;
                SkewTableau t{shape, rows};
                if (is_valid_tableau(t)) found.push_back(t);
                return;
            }
            int hi = i == 0 ? width : offset[static_cast<std::size_t>(i - 1)];
            for (int v = 0; v <= hi; ++v) {
                offset[static_cast<std::size_t>(i)] = v;
                self(self, i + 1);
            }
        };
        place(place, 0);
        arrangements += static_cast<long long>(found.size());
        if (found.empty()) {
            bad = "no valid arrangement found";
            break;
        }
        int base_stab = stab(found.front()).stab;
        SkewTableau base_rect = rect(found.front());
        for (const auto& t : found) {
            if (!row_shift_equivalent(t, found.front()))
                bad = "arrangements of equal rows not equivalent at " + describe(t);
            else if (stab(t).stab != base_stab)
                bad = "stabilization varies across arrangements at " + describe(t);
            else if (rect(t) != base_rect)
                bad = "rectification varies across arrangements at " + describe(t);
            if (!bad.empty()) break;
        }
        if (!bad.empty()) break;
    }
    out.push_back(make_check("prop-row-shift-arrangements", bad.empty(),
                             bad.empty() ? std::to_string(arrangements) + " arrangements across instances"
                                         : bad));
}

void prop_bumping_geometry(std::vector<CheckResult>& out, unsigned seed) {
    std::mt19937 rng(seed + 1);
    std::string bad;
    long long trials = 0;
    for (int trial = 0; trial < 200 && bad.empty(); ++trial) {
        std::vector<int> pool(24);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        int n = 2 + static_cast<int>(rng() % 7);
        Word w(pool.begin(), pool.begin() + n);
        int x = pool[static_cast<std::size_t>(n)];
        int y = pool[static_cast<std::size_t>(n + 1)];
        SkewTableau t = rsk(w).p;
        InsertionResult first = row_insert(t, x);
        InsertionResult second = row_insert(first.tableau, y);
        const auto& cx = first.chain.steps;
        const auto& cy = second.chain.steps;
        ++trials;
        if (x < y) {
            for (std::size_t i = 0; i < cy.size() && bad.empty(); ++i) {
                if (i < cx.size() && cy[i].col <= cx[i].col) bad = "later chain not strictly right";
            }
            if (bad.empty() && (cy.size() > cx.size() || cy.back().row > cx.back().row ||
                                cy.back().col <= cx.back().col))
                bad = "new cell of the later insertion not weakly above and strictly right";
        } else {
            for (std::size_t i = 0; i < cx.size() && bad.empty(); ++i) {
                if (i < cy.size() && cy[i].col > cx[i].col) bad = "later chain not weakly left";
            }
            if (bad.empty() && (cy.size() <= cx.size() || cy.back().row <= cx.back().row ||
                                cy.back().col > cx.back().col))
                bad = "new cell of the later insertion not strictly below and weakly left";
        }
    }
    out.push_back(make_check("prop-bumping-geometry", bad.empty(),
                             bad.empty() ? std::to_string(trials) + " random double insertions" : bad));
}

void prop_io_identities(std::vector<CheckResult>& out) {
    // Reading-word and dagger sanity across the small sweep: dagger is an
    // involution and complements descents; the reading word is standard.
    std::string bad;
    long long tableaux = 0;
    for (const auto& shape : skew_shapes_in_box(4, 4)) {
        for_each_syt(shape, [&](const SkewTableau& t) {
            ++tableaux;
            if (left_normalized(dagger(dagger(t))) != left_normalized(t))
                bad = "double rotation is not the identity at " + describe(t);
            else if (!is_permutation_word(reading_word(t)))
                bad = "reading word not a permutation at " + describe(t);
            return bad.empty();
        });
        if (!bad.empty()) break;
    }
    out.push_back(make_check("prop-rotation-involution", bad.empty(),
                             bad.empty() ? std::to_string(tableaux) + " tableaux" : bad));
}

}  // namespace

std::vector<CheckResult> verify_properties(unsigned seed) {
    std::vector<CheckResult> out;
    prop_rect_routes(out);
    prop_antirect_flip(out);
    prop_greene(out, seed);
    prop_descents(out);
    prop_evacuation(out);
    prop_promotion_order(out);
    prop_promotion_shape(out);
    prop_dual_moves(out);
    prop_stab_star(out);
    prop_stab_persistence(out);
    prop_left_right_copies(out);
    prop_row_shift_arrangements(out);
    prop_bumping_geometry(out, seed);
    prop_io_identities(out);
    return out;
}

}  // namespace tlab
