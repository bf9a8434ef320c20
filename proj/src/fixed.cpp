#include "tlab/fixed.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "tlab/coreq.hpp"
#include "tlab/jdt.hpp"
#include "tlab/rsk.hpp"
#include "tlab/stabilize.hpp"

namespace tlab {

int syt_cell_limit() {
    if (const char* env = std::getenv("TABLEAU_LAB_MAX_CELLS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 16;
}

namespace {

void check_cell_limit(int cells, const char* what) {
    int limit = syt_cell_limit();
    if (cells > limit) {
        throw EnumerationLimit(std::string(what) + " limited to " + std::to_string(limit) +
                               " cells (override with TABLEAU_LAB_MAX_CELLS)");
    }
}

struct SytEnumerator {
    const SkewShape& shape;
    const std::function<bool(const SkewTableau&)>& visit;
    int b;
    int n;
    std::vector<int> filled;  // cells placed so far in each row
    SkewTableau work;
    bool stopped = false;

    SytEnumerator(const SkewShape& sh, const std::function<bool(const SkewTableau&)>& v)
        : shape(sh), visit(v), b(sh.rows()), n(static_cast<int>(sh.size())), filled(static_cast<std::size_t>(b), 0) {
        work.shape = shape;
        work.rows.assign(static_cast<std::size_t>(b), {});
        for (auto& row : work.rows) row.reserve(static_cast<std::size_t>(shape.outer.at(1)));
    }

    void place(int entry) {
        if (stopped) return;
        if (entry > n) {
            if (!visit(work)) stopped = true;
            return;
        }
        for (int i = 1; i <= b && !stopped; ++i) {
            int col = shape.inner_at(i) + filled[static_cast<std::size_t>(i - 1)] + 1;
            if (col > shape.outer_at(i)) continue;
            // The cell above must already be filled or lie outside the shape.
            if (i > 1 && col > shape.inner_at(i - 1) + filled[static_cast<std::size_t>(i - 2)]) continue;
            work.rows[static_cast<std::size_t>(i - 1)].push_back(entry);
            ++filled[static_cast<std::size_t>(i - 1)];
            place(entry + 1);
            --filled[static_cast<std::size_t>(i - 1)];
            work.rows[static_cast<std::size_t>(i - 1)].pop_back();
        }
    }
};

}  // namespace

bool for_each_syt(const SkewShape& shape, const std::function<bool(const SkewTableau&)>& visit) {
    validate_shape(shape);
    check_cell_limit(static_cast<int>(shape.size()), "standard filling enumeration");
    SytEnumerator e(shape, visit);
    e.place(1);
    return !e.stopped;
}

std::vector<SkewTableau> enumerate_syt(const SkewShape& shape) {
    std::vector<SkewTableau> out;
    for_each_syt(shape, [&](const SkewTableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

long long hook_count(const Partition& p) {
    validate_partition(p);
    long long n = p.size();
    if (n > 20) throw std::invalid_argument("hook length count is exact only up to 20 cells");
    Partition conj = conjugate(p);
    long long denom = 1;
    for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.at(i); ++j) {
            denom *= p.at(i) - j + conj.at(j) - i + 1;
        }
    }
    long long num = 1;
    for (long long v = 2; v <= n; ++v) num *= v;
    return num / denom;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

long long multinomial(int total, const std::vector<int>& sizes) {
    long long r = 1;
    int rem = total;
    for (int s : sizes) {
        if (s < 0 || s > rem) throw std::invalid_argument("multinomial block sizes must partition the total");
        r *= binomial(rem, s);
        rem -= s;
    }
    if (rem != 0) throw std::invalid_argument("multinomial block sizes must partition the total");
    return r;
}

std::vector<SkewTableau> enumerate_fixed(int a, int b, int d) {
    if (a < 1 || b < 1 || d < 1) throw std::invalid_argument("rectangle fixed point search needs positive a, b, d");
    if ((a * b) % d != 0) throw std::invalid_argument("promotion power must divide the rectangle size");
    Partition rect_shape;
    rect_shape.parts.assign(static_cast<std::size_t>(b), a);
    SkewShape shape{rect_shape, Partition{}};
    std::vector<SkewTableau> out;
    for_each_syt(shape, [&](const SkewTableau& t) {
        if (promote_power(t, d) == t) out.push_back(t);
        return true;
    });
    return out;
}

SkewShape block_antidiagonal_shape(int b, int r) {
    if (b < 1 || r < 1) throw std::invalid_argument("block anti-diagonal needs b, r >= 1");
    std::vector<Partition> pieces(static_cast<std::size_t>(b), Partition{{r}});
    return antidiagonal_union(pieces);
}

std::vector<Partition> two_block_pieces(int b, int r) {
    if (b < 1 || r < 1) throw std::invalid_argument("two-block pieces need b, r >= 1");
    Partition tall{std::vector<int>(static_cast<std::size_t>((b + 1) / 2), r)};
    Partition flat{std::vector<int>(static_cast<std::size_t>(b / 2), r)};
    return {tall, flat};
}

SkewShape two_block_shape(int b, int r) { return antidiagonal_union(two_block_pieces(b, r)); }

long long count_fixed(int a, int b, int d) {
    if (a < 1 || b < 1 || d < 1) throw std::invalid_argument("rectangle fixed point count needs positive a, b, d");
    int n = a * b;
    if (n % d != 0) throw std::invalid_argument("promotion power must divide the rectangle size");
    int r = n / d;  // fixed points of pr^d match the r-quotient structure
    Partition rect_shape;
    rect_shape.parts.assign(static_cast<std::size_t>(b), a);
    QuotientDecomposition q = quotient(rect_shape, r);
    if (!q.core.empty()) return 0;
    std::vector<int> sizes;
    long long product = 1;
    for (const Partition& piece : q.pieces) {
        sizes.push_back(static_cast<int>(piece.size()));
        product *= hook_count(piece);
    }
    return multinomial(d, sizes) * product;
}

SkewTableau reindex(const SkewTableau& t, int m, const std::vector<int>& entries) {
    validate_standard(t);
    int n = static_cast<int>(t.size());
    if (n == 0) return t;
    int k = static_cast<int>(entries.size());
    if (k == 0 || n % k != 0) throw std::invalid_argument("entry set size must divide the tableau size");
    for (int i = 0; i < k; ++i) {
        if (entries[static_cast<std::size_t>(i)] < 1 || entries[static_cast<std::size_t>(i)] > m) {
            throw std::invalid_argument("reindex entries must lie in [1, m]");
        }
        if (i > 0 && entries[static_cast<std::size_t>(i)] <= entries[static_cast<std::size_t>(i - 1)]) {
            throw std::invalid_argument("reindex entries must be strictly increasing");
        }
    }
    SkewTableau out = t;
    for (auto& row : out.rows) {
        for (int& e : row) {
            int block = (e - 1) / k;
            int pos = (e - 1) % k;
            e = block * m + entries[static_cast<std::size_t>(pos)];
        }
    }
    validate_tableau(out);
    return out;
}

namespace {

// Constant positive row length over the nonempty rows, or 0 if not constant.
int constant_row_length(const SkewTableau& t, int* rows_out) {
    SkewTableau s = trim_empty_boundary_rows(t);
    int b = s.row_count();
    if (b == 0) return 0;
    int r = static_cast<int>(s.rows[0].size());
    for (const auto& row : s.rows) {
        if (static_cast<int>(row.size()) != r) return 0;
    }
    if (rows_out) *rows_out = b;
    return r;
}

std::vector<int> row_or_empty(const SkewTableau& t, int i) {
    if (i <= t.row_count()) return t.rows[static_cast<std::size_t>(i - 1)];
    return {};
}

SkewTableau assemble_rows(const std::vector<std::vector<int>>& parts_by_row) {
    std::vector<std::vector<int>> rows = parts_by_row;
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return straight_tableau(std::move(rows));
}

}  // namespace

SkewTableau construct_Ra(const SkewTableau& s, int a) {
    validate_standard(s);
    int b = 0;
    int r = constant_row_length(s, &b);
    if (r == 0) throw std::invalid_argument("construction requires a constant row vector");
    SkewTableau base = trim_empty_boundary_rows(s);
    int k = stab(base).stab;
    if (a < 2 * k - 1) {
        throw std::invalid_argument("construction requires a >= 2*stab - 1 = " + std::to_string(2 * k - 1));
    }
    int m = b * r;
    SkewTableau mid = shift_entries(shifted_copies(base, a - 2 * k + 2), (k - 1) * m);
    SkewTableau left;
    SkewTableau right;
    if (k > 1) {
        SkewTableau copies = shifted_copies(base, k - 1);
        left = rect(copies);
        right = shift_entries(antirect(copies), (a - k + 1) * m);
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(b));
    for (int i = 1; i <= b; ++i) {
        std::vector<int> row = row_or_empty(left, i);
        std::vector<int> midrow = row_or_empty(mid, i);
        std::vector<int> rightrow = row_or_empty(right, i);
        row.insert(row.end(), midrow.begin(), midrow.end());
        row.insert(row.end(), rightrow.begin(), rightrow.end());
        rows[static_cast<std::size_t>(i - 1)] = std::move(row);
    }
    SkewTableau out = assemble_rows(rows);
    validate_standard(out);
    if (out.row_count() != b) throw std::logic_error("assembled construction lost rows");
    for (int i = 1; i <= b; ++i) {
        if (out.shape.outer.at(i) != static_cast<long long>(a) * r) {
            throw std::logic_error("assembled construction is not a rectangle");
        }
    }
    return out;
}

SkewTableau construct_R2(const SkewTableau& s) {
    validate_standard(s);
    SkewTableau base = trim_empty_boundary_rows(s);
    int n = static_cast<int>(base.size());
    if (n == 0) throw std::invalid_argument("two-copy construction needs a nonempty tableau");
    int b = base.row_count();
    SkewTableau left = rect(base);
    SkewTableau right = shift_entries(antirect(base), n);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(b));
    for (int i = 1; i <= b; ++i) {
        std::vector<int> row = row_or_empty(left, i);
        std::vector<int> rightrow = row_or_empty(right, i);
        row.insert(row.end(), rightrow.begin(), rightrow.end());
        rows[static_cast<std::size_t>(i - 1)] = std::move(row);
    }
    SkewTableau out;
    try {
        out = assemble_rows(rows);
        validate_standard(out);
    } catch (const std::exception&) {
        throw std::invalid_argument("two-copy construction did not assemble to a standard tableau");
    }
    int width = out.shape.outer.at(1);
    if (out.row_count() != b || static_cast<long long>(width) * b != 2LL * n) {
        throw std::invalid_argument("two-copy construction did not assemble to a rectangle");
    }
    for (int i = 1; i <= b; ++i) {
        if (out.shape.outer.at(i) != width) {
            throw std::invalid_argument("two-copy construction did not assemble to a rectangle");
        }
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> set_compositions(int total, const std::vector<int>& sizes) {
    long long expect = 0;
    for (int s : sizes) {
        if (s < 0) throw std::invalid_argument("set composition block sizes must be nonnegative");
        expect += s;
    }
    if (expect != total) throw std::invalid_argument("set composition block sizes must sum to the total");

    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current(sizes.size());
    std::vector<int> pool(static_cast<std::size_t>(total));
    std::iota(pool.begin(), pool.end(), 1);

    std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t block, std::vector<int>& avail) {
        if (block == sizes.size()) {
            out.push_back(current);
            return;
        }
        int need = sizes[block];
        std::vector<int> chosen(static_cast<std::size_t>(need));
        std::function<void(int, int)> choose = [&](int start, int got) {
            if (got == need) {
                std::vector<int> rest;
                rest.reserve(avail.size() - static_cast<std::size_t>(need));
                std::set_difference(avail.begin(), avail.end(), chosen.begin(), chosen.end(),
                                    std::back_inserter(rest));
                current[block] = chosen;
                rec(block + 1, rest);
                return;
            }
            for (int i = start; i < static_cast<int>(avail.size()); ++i) {
                chosen[static_cast<std::size_t>(got)] = avail[static_cast<std::size_t>(i)];
                choose(i + 1, got + 1);
            }
        };
        choose(0, 0);
    };
    rec(0, pool);
    return out;
}

std::vector<SkewTableau> block_fixed_points(const std::vector<Partition>& pieces, int k) {
    if (k < 1) throw std::invalid_argument("promotion power must be positive");
    long long n = 0;
    for (const Partition& p : pieces) {
        validate_partition(p);
        n += p.size();
    }
    if (n % k != 0) throw std::invalid_argument("promotion power must divide the total size");
    for (const Partition& p : pieces) {
        if (p.size() % k != 0) return {};
    }
    int m = static_cast<int>(n / k);

    std::vector<int> sizes;
    std::vector<std::vector<SkewTableau>> piece_fixed;
    for (const Partition& p : pieces) {
        int mj = static_cast<int>(p.size()) / k;
        sizes.push_back(mj);
        std::vector<SkewTableau> fixed;
        for_each_syt(SkewShape{p, Partition{}}, [&](const SkewTableau& t) {
            if (mj == 0 || promote_power(t, mj) == t) fixed.push_back(t);
            return true;
        });
        piece_fixed.push_back(std::move(fixed));
    }

    for (const auto& f : piece_fixed) {
        if (f.empty()) return {};
    }

    SkewShape shape = antidiagonal_union(pieces);
    std::set<SkewTableau> found;
    for (const auto& blocks : set_compositions(m, sizes)) {
        // Cartesian product over the per-piece fixed sets.
        std::vector<std::size_t> pick(pieces.size(), 0);
        bool more = true;
        while (more) {
            std::vector<std::vector<int>> rows;
            for (std::size_t idx = pieces.size(); idx-- > 0;) {
                if (pieces[idx].empty()) continue;
                SkewTableau part = reindex(piece_fixed[idx][pick[idx]], m, blocks[idx]);
                for (auto& row : part.rows) rows.push_back(std::move(row));
            }
            SkewTableau t = make_tableau(shape, std::move(rows));
            validate_standard(t);
            found.insert(std::move(t));

            more = false;
            for (std::size_t j = 0; j < pieces.size(); ++j) {
                if (++pick[j] < piece_fixed[j].size()) {
                    more = true;
                    break;
                }
                pick[j] = 0;
            }
        }
    }
    return std::vector<SkewTableau>(found.begin(), found.end());
}

long long lr_coefficient(const Partition& outer, const Partition& inner, const Partition& nu) {
    SkewShape shape{outer, inner};
    validate_shape(shape);
    validate_partition(nu);
    if (shape.size() != nu.size()) return 0;
    if (shape.size() > 12) throw std::invalid_argument("coefficient search limited to 12 cells");
    SkewTableau target = superstandard_tableau(nu);
    long long count = 0;
    for_each_syt(shape, [&](const SkewTableau& t) {
        if (rect(t) == target) ++count;
        return true;
    });
    return count;
}

SkewTableau superstandard_tableau(const Partition& p) {
    validate_partition(p);
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int i = 1; i <= p.rows(); ++i) {
        std::vector<int> row(static_cast<std::size_t>(p.at(i)));
        std::iota(row.begin(), row.end(), next);
        next += p.at(i);
        rows.push_back(std::move(row));
    }
    return straight_tableau(std::move(rows));
}

CspReport csp_evaluate(int a, int b, int k) {
    if (a < 1 || b < 1) throw std::invalid_argument("cyclic sieving evaluation needs a positive rectangle");
    int n = a * b;
    CspReport rep;
    rep.n = n;
    rep.k = k;
    int km = ((k % n) + n) % n;
    int g = km == 0 ? n : std::gcd(n, km);
    rep.root_order = n / g;
    int e = rep.root_order;

    std::vector<int> hooks;
    for (int i = 1; i <= b; ++i) {
        for (int j = 1; j <= a; ++j) {
            hooks.push_back((b - i) + (a - j) + 1);
        }
    }

    std::vector<int> num_zero, num_rest, den_zero, den_rest;
    for (int mfac = 1; mfac <= n; ++mfac) {
        (mfac % e == 0 ? num_zero : num_rest).push_back(mfac);
    }
    for (int h : hooks) {
        (h % e == 0 ? den_zero : den_rest).push_back(h);
    }
    std::sort(den_zero.begin(), den_zero.end());

    if (num_zero.size() < den_zero.size()) {
        throw std::logic_error("q-analogue has a pole at this root of unity");
    }

    if (num_zero.size() > den_zero.size()) {
        rep.poly_value = 0;
        rep.residual = 0.0;
    } else {
        // Paired vanishing factors contribute the exact rational m/h.
        long long rnum = 1, rden = 1;
        for (std::size_t i = 0; i < num_zero.size(); ++i) {
            rnum *= num_zero[i];
            rden *= den_zero[i];
            long long d = std::gcd(rnum, rden);
            rnum /= d;
            rden /= d;
        }
        const double tau = 6.283185307179586476925286766559;
        std::complex<double> value(static_cast<double>(rnum) / static_cast<double>(rden), 0.0);
        auto factor = [&](int x) {
            double ang = tau * static_cast<double>(km) * static_cast<double>(x) / static_cast<double>(n);
            return std::complex<double>(std::cos(ang) - 1.0, std::sin(ang));
        };
        for (int mfac : num_rest) value *= factor(mfac);
        for (int h : den_rest) value /= factor(h);
        rep.poly_value = std::llround(value.real());
        rep.residual = std::abs(value - std::complex<double>(static_cast<double>(rep.poly_value), 0.0));
    }

    rep.fixed_count = static_cast<long long>(enumerate_fixed(a, b, g).size());
    return rep;
}

int stab_of_permutation(const Word& w) {
    return stab(permutation_tableau(w)).stab;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions are defined for nonnegative sizes");
    std::vector<Partition> out;
    Partition current;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(current);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            current.parts.push_back(p);
            rec(rem - p, p);
            current.parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    }
    for (auto& w : workers) w.join();
}

std::vector<long long> stab_distribution(int n, int jobs) {
    if (n < 1) throw std::invalid_argument("distribution is defined for positive n");
    struct Task {
        Word word;
        long long weight;
    };
    std::vector<Task> tasks;
    for (const Partition& shape : partitions_of(n)) {
        SkewTableau p0 = superstandard_tableau(shape);
        long long weight = hook_count(shape);
        for_each_syt(SkewShape{shape, Partition{}}, [&](const SkewTableau& q) {
            tasks.push_back(Task{rsk_inverse(p0, q), weight});
            return true;
        });
    }
    std::vector<std::atomic<long long>> counts(static_cast<std::size_t>(n));
    for (auto& c : counts) c.store(0);
    parallel_for(static_cast<int>(tasks.size()), jobs, [&](int i) {
        int s = stab_of_permutation(tasks[static_cast<std::size_t>(i)].word);
        counts[static_cast<std::size_t>(s - 1)].fetch_add(tasks[static_cast<std::size_t>(i)].weight);
    });
    std::vector<long long> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = counts[static_cast<std::size_t>(i)].load();
    return out;
}

std::vector<long long> stab_distribution_direct(int n) {
    if (n < 1) throw std::invalid_argument("distribution is defined for positive n");
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<long long> out(static_cast<std::size_t>(n), 0);
    do {
        ++out[static_cast<std::size_t>(stab_of_permutation(w) - 1)];
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

long long stab2_count(int n) {
    if (n < 1) throw std::invalid_argument("count is defined for positive n");
    return binomial(n + 1, (n + 1) / 2) - 2;
}

}  // namespace tlab
