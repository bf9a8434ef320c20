#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tlab/coreq.hpp>
#include <tlab/fixed.hpp>
#include <tlab/jdt.hpp>
#include <tlab/rsk.hpp>
#include <tlab/stabilize.hpp>
#include <tlab/tableau.hpp>
#include <tlab/verify.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

using tlab::Partition;
using tlab::SkewShape;
using tlab::SkewTableau;
using tlab::Word;

namespace {

SkewTableau skew(std::vector<int> outer, std::vector<int> inner,
                 std::vector<std::vector<int>> rows) {
    return tlab::make_tableau(
        SkewShape{Partition{std::move(outer)}, Partition{std::move(inner)}}, std::move(rows));
}

SkewShape rectangle(int cols, int rows) {
    return SkewShape{Partition{std::vector<int>(rows, cols)}, Partition{}};
}

std::vector<int> divisors_of(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::vector<Word> all_permutations(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// four single-box rows stacked anti-diagonally, filled top to bottom
SkewTableau four_box_staircase(std::vector<int> entries) {
    std::vector<std::vector<int>> rows;
    for (int e : entries) rows.push_back({e});
    return skew({4, 3, 2, 1}, {3, 2, 1}, std::move(rows));
}

}  // namespace

TEST_CASE("counting helpers agree with hand values") {
    CHECK(tlab::binomial(9, 4) == 126);
    CHECK(tlab::binomial(5, 0) == 1);
    CHECK(tlab::binomial(4, 5) == 0);
    CHECK(tlab::multinomial(10, {6, 4}) == 210);
    CHECK(tlab::multinomial(4, {2, 2}) == 6);
    CHECK_THROWS_AS(tlab::multinomial(5, {2, 2}), std::invalid_argument);

    CHECK(tlab::hook_count(Partition{{1}}) == 1);
    CHECK(tlab::hook_count(Partition{{2, 2}}) == 2);
    CHECK(tlab::hook_count(Partition{{3, 3}}) == 5);
    CHECK(tlab::hook_count(Partition{{4, 4}}) == 14);
    CHECK(tlab::hook_count(Partition{{6, 6}}) == 132);
    CHECK(tlab::hook_count(Partition{{5, 5, 5}}) == 6006);
    CHECK(tlab::hook_count(Partition{{3, 2}}) == 5);
    CHECK(tlab::hook_count(Partition{}) == 1);
}

TEST_CASE("partitions and ordered set partitions enumerate completely") {
    std::vector<Partition> parts5 = tlab::partitions_of(5);
    CHECK(parts5.size() == 7);
    for (const Partition& p : parts5) CHECK(p.size() == 5);
    CHECK(std::count(parts5.begin(), parts5.end(), Partition{{5}}) == 1);
    CHECK(std::count(parts5.begin(), parts5.end(), Partition{{1, 1, 1, 1, 1}}) == 1);
    CHECK(tlab::partitions_of(0).size() == 1);

    auto comps = tlab::set_compositions(4, {2, 2});
    CHECK(comps.size() == 6);
    std::set<std::vector<std::vector<int>>> distinct(comps.begin(), comps.end());
    CHECK(distinct.size() == 6);
    for (const auto& comp : comps) {
        REQUIRE(comp.size() == 2);
        std::vector<int> all;
        for (const auto& block : comp) {
            CHECK(block.size() == 2);
            all.insert(all.end(), block.begin(), block.end());
        }
        std::sort(all.begin(), all.end());
        CHECK(all == std::vector<int>{1, 2, 3, 4});
    }
}

TEST_CASE("standard filling enumeration matches hook counts and honors the cap") {
    CHECK(tlab::enumerate_syt(rectangle(3, 2)).size() == 5);
    CHECK(tlab::enumerate_syt(rectangle(4, 2)).size() == 14);
    CHECK(tlab::enumerate_syt(SkewShape{Partition{{3, 2}}, Partition{}}).size() == 5);

    // skew union of (3,3) and (2,2): interleavings times the piece counts
    SkewShape uni = tlab::antidiagonal_union({Partition{{3, 3}}, Partition{{2, 2}}});
    CHECK(tlab::enumerate_syt(uni).size() == 210 * 5 * 2);

    int seen = 0;
    bool finished = tlab::for_each_syt(rectangle(3, 2), [&](const SkewTableau&) {
        ++seen;
        return seen < 3;
    });
    CHECK_FALSE(finished);
    CHECK(seen == 3);
    CHECK(tlab::for_each_syt(rectangle(2, 2), [](const SkewTableau&) { return true; }));

    CHECK(tlab::syt_cell_limit() == 16);
    CHECK_THROWS_AS(tlab::enumerate_syt(SkewShape{Partition{{17}}, Partition{}}),
                    tlab::EnumerationLimit);
    CHECK_THROWS_AS(tlab::enumerate_fixed(6, 3, 6), tlab::EnumerationLimit);
}

TEST_CASE("promotion fixed point counts match brute force over small rectangles") {
    std::vector<std::pair<int, int>> cases = {{1, 1}, {2, 1}, {1, 3}, {2, 2}, {3, 2}, {2, 3},
                                              {4, 2}, {3, 3}, {2, 4}, {4, 3}, {3, 4}, {5, 2},
                                              {5, 3}, {6, 2}, {4, 4}};
    for (auto [a, b] : cases) {
        CAPTURE(a);
        CAPTURE(b);
        std::vector<SkewTableau> all = tlab::enumerate_syt(rectangle(a, b));
        CHECK((long long)all.size() ==
              tlab::hook_count(Partition{std::vector<int>(b, a)}));
        for (int d : divisors_of(a * b)) {
            CAPTURE(d);
            long long brute = 0;
            for (const SkewTableau& t : all)
                if (tlab::promote_power(t, d) == t) ++brute;
            CHECK(tlab::count_fixed(a, b, d) == brute);
            CHECK((long long)tlab::enumerate_fixed(a, b, d).size() == brute);
        }
    }
}

TEST_CASE("pinned promotion fixed point counts") {
    CHECK(tlab::count_fixed(2, 3, 3) == 3);
    CHECK(tlab::count_fixed(2, 4, 4) == 6);
    CHECK(tlab::count_fixed(4, 2, 4) == 6);
    CHECK(tlab::count_fixed(5, 3, 3) == 6);
    CHECK(tlab::count_fixed(6, 2, 6) == 20);
    CHECK(tlab::count_fixed(6, 3, 6) == 90);

    std::set<SkewTableau> square;
    for (const SkewTableau& t : tlab::enumerate_fixed(2, 2, 2)) square.insert(t);
    std::set<SkewTableau> expected = {tlab::straight_tableau({{1, 3}, {2, 4}}),
                                      tlab::straight_tableau({{1, 2}, {3, 4}})};
    CHECK(square == expected);

    CHECK_THROWS_AS(tlab::enumerate_fixed(3, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(tlab::count_fixed(3, 2, 4), std::invalid_argument);
}

TEST_CASE("large fixed tableaux are indeed fixed by the right promotion power") {
    SkewTableau two_rows = tlab::straight_tableau({{1, 2, 4, 5, 6, 8}, {3, 7, 9, 10, 11, 12}});
    CHECK(tlab::promote_power(two_rows, 6) == two_rows);

    SkewTableau three_rows = tlab::straight_tableau(
        {{1, 2, 5, 6, 8, 14}, {3, 7, 9, 11, 12, 15}, {4, 10, 13, 16, 17, 18}});
    CHECK(tlab::promote_power(three_rows, 6) == three_rows);

    SkewTableau five_rows = tlab::straight_tableau({{1, 2, 3, 7, 8},
                                                    {4, 5, 10, 12, 13},
                                                    {6, 9, 15, 17, 18},
                                                    {11, 14, 20, 22, 23},
                                                    {16, 19, 21, 24, 25}});
    CHECK(tlab::promote_power(five_rows, 5) == five_rows);
}

TEST_CASE("entry reindexing follows the arithmetic rule") {
    SkewTableau t = tlab::straight_tableau({{1, 2, 5, 8}, {3, 6, 9, 11}, {4, 7, 10, 12}});
    CHECK(tlab::reindex(t, 6, {2, 4, 5}) ==
          tlab::straight_tableau({{2, 4, 10, 16}, {5, 11, 17, 22}, {8, 14, 20, 23}}));

    SkewTableau t1 = tlab::straight_tableau({{1, 2, 5}, {3, 4, 6}});
    CHECK(tlab::reindex(t1, 5, {1, 4, 5}) ==
          tlab::straight_tableau({{1, 4, 9}, {5, 6, 10}}));

    SkewTableau t2 = tlab::straight_tableau({{1, 3}, {2, 4}});
    CHECK(tlab::reindex(t2, 5, {2, 3}) == tlab::straight_tableau({{2, 7}, {3, 8}}));

    CHECK_THROWS_AS(tlab::reindex(t2, 5, {2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(tlab::reindex(t2, 5, {3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(tlab::reindex(t2, 3, {2, 4}), std::invalid_argument);
}

TEST_CASE("blockwise fixed points match a brute filter of the union shape") {
    std::vector<Partition> pieces = {Partition{{3, 3}}, Partition{{2, 2}}};
    std::vector<SkewTableau> assembled = tlab::block_fixed_points(pieces, 2);

    SkewShape uni = tlab::antidiagonal_union(pieces);
    std::set<SkewTableau> brute;
    for (const SkewTableau& t : tlab::enumerate_syt(uni))
        if (tlab::promote_power(t, 5) == t) brute.insert(t);

    std::set<SkewTableau> got(assembled.begin(), assembled.end());
    CHECK(got.size() == assembled.size());
    CHECK(got == brute);

    SkewTableau pinned = skew({5, 5, 3, 3}, {3, 3}, {{2, 7}, {3, 8}, {1, 4, 9}, {5, 6, 10}});
    CHECK(got.count(pinned) == 1);

    CHECK(tlab::block_fixed_points({Partition{{1}}, Partition{{1}}}, 2).empty());
}

TEST_CASE("skew class counts against the superstandard target") {
    CHECK(tlab::superstandard_tableau(Partition{{3, 2}}) ==
          tlab::straight_tableau({{1, 2, 3}, {4, 5}}));

    Partition outer{{2, 1}};
    Partition inner{{1}};
    CHECK(tlab::lr_coefficient(outer, inner, Partition{{2}}) == 1);
    CHECK(tlab::lr_coefficient(outer, inner, Partition{{1, 1}}) == 1);
    CHECK(tlab::lr_coefficient(outer, inner, Partition{{3}}) == 0);

    // the classes partition all standard fillings of the skew shape
    for (const SkewShape& shape :
         {SkewShape{Partition{{3, 3}}, Partition{{1}}}, SkewShape{Partition{{4, 2}}, Partition{{1}}}}) {
        long long total = 0;
        for (const Partition& nu : tlab::partitions_of(static_cast<int>(shape.size())))
            total += tlab::lr_coefficient(shape.outer, shape.inner, nu) * tlab::hook_count(nu);
        CHECK(total == (long long)tlab::enumerate_syt(shape).size());
    }
}

TEST_CASE("row concatenation construction reproduces pinned displays") {
    SkewTableau s6 = skew({6, 4, 2}, {4, 2}, {{2, 6}, {4, 5}, {1, 3}});
    CHECK(tlab::stab(s6).stab == 3);
    CHECK(tlab::rect(tlab::shifted_copies(s6, 2)) ==
          tlab::straight_tableau({{1, 2, 4, 5, 6, 8, 12}, {3, 9, 10, 11}, {7}}));
    SkewTableau r6 = tlab::construct_Ra(s6, 6);
    CHECK(r6 == tlab::straight_tableau(
                    {{1, 2, 4, 5, 6, 8, 12, 14, 18, 20, 24, 26},
                     {3, 9, 10, 11, 16, 17, 22, 23, 28, 29, 30, 32},
                     {7, 13, 15, 19, 21, 25, 27, 31, 33, 34, 35, 36}}));
    CHECK(tlab::promote_power(r6, 6) == r6);

    SkewTableau s = four_box_staircase({2, 1, 3, 4});
    CHECK(tlab::stab(s).stab == 2);
    SkewTableau r3 = tlab::construct_Ra(s, 3);
    CHECK(r3 == tlab::straight_tableau({{1, 2, 6}, {3, 5, 10}, {4, 7, 11}, {8, 9, 12}}));
    CHECK(tlab::promote_power(r3, 4) == r3);

    SkewTableau t = four_box_staircase({2, 1, 4, 3});
    CHECK(tlab::stab(t).stab == 3);
    SkewTableau r5 = tlab::construct_Ra(t, 5);
    CHECK(r5 == tlab::straight_tableau({{1, 2, 5, 6, 10},
                                        {3, 4, 9, 13, 14},
                                        {7, 8, 12, 17, 18},
                                        {11, 15, 16, 19, 20}}));
    CHECK(tlab::promote_power(r5, 4) == r5);

    SkewTableau u = four_box_staircase({4, 3, 2, 1});
    CHECK(tlab::stab(u).stab == 4);
    SkewTableau r7 = tlab::construct_Ra(u, 7);
    CHECK(r7 == tlab::straight_tableau({{1, 2, 3, 4, 8, 12, 16},
                                        {5, 6, 7, 11, 15, 19, 20},
                                        {9, 10, 14, 18, 22, 23, 24},
                                        {13, 17, 21, 25, 26, 27, 28}}));
    CHECK(tlab::promote_power(r7, 4) == r7);
}

TEST_CASE("row concatenation construction rejects bad parameters") {
    SkewTableau s = four_box_staircase({2, 1, 3, 4});
    CHECK_THROWS_WITH_AS(tlab::construct_Ra(s, 2),
                         "construction requires a >= 2*stab - 1 = 3", std::invalid_argument);
    SkewTableau u = four_box_staircase({4, 3, 2, 1});
    CHECK_THROWS_WITH_AS(tlab::construct_Ra(u, 6),
                         "construction requires a >= 2*stab - 1 = 7", std::invalid_argument);
    SkewTableau uneven = skew({2, 2}, {1}, {{2}, {1, 3}});
    CHECK_THROWS_WITH_AS(tlab::construct_Ra(uneven, 9),
                         "construction requires a constant row vector", std::invalid_argument);
}

TEST_CASE("some promotion fixed rectangles are outside the construction image") {
    SkewShape domain = tlab::block_antidiagonal_shape(4, 1);
    std::vector<SkewTableau> inputs = tlab::enumerate_syt(domain);
    CHECK(inputs.size() == 24);

    std::set<SkewTableau> image3, image5;
    int eligible3 = 0, eligible5 = 0;
    for (const SkewTableau& s : inputs) {
        int k = tlab::stab(s).stab;
        if (3 >= 2 * k - 1) {
            ++eligible3;
            image3.insert(tlab::construct_Ra(s, 3));
        }
        if (5 >= 2 * k - 1) {
            ++eligible5;
            image5.insert(tlab::construct_Ra(s, 5));
        }
    }

    SkewTableau v = tlab::straight_tableau({{1, 3, 4}, {2, 5, 8}, {6, 7, 9}, {10, 11, 12}});
    CHECK(tlab::promote_power(v, 4) == v);
    CHECK(image3.count(v) == 0);

    SkewTableau w = tlab::straight_tableau({{1, 2, 3, 4, 8},
                                            {5, 6, 7, 11, 12},
                                            {9, 10, 14, 15, 16},
                                            {13, 17, 18, 19, 20}});
    CHECK(tlab::promote_power(w, 4) == w);
    CHECK(image5.count(w) == 0);

    // the images themselves are fixed, and distinct inputs give distinct outputs
    for (const SkewTableau& r : image3) CHECK(tlab::promote_power(r, 4) == r);
    CHECK((int)image3.size() == eligible3);
    CHECK((int)image5.size() == eligible5);
    CHECK(eligible5 == 23);
}

TEST_CASE("two copy construction reproduces pinned displays") {
    SkewTableau s = skew({4, 4, 2, 2}, {2, 2}, {{2, 5}, {6, 8}, {1, 3}, {4, 7}});
    CHECK(tlab::rect(s) == tlab::straight_tableau({{1, 2, 5, 8}, {3, 6}, {4, 7}}));
    SkewTableau r2 = tlab::construct_R2(s);
    CHECK(r2 == tlab::straight_tableau(
                    {{1, 2, 5, 8}, {3, 6, 10, 13}, {4, 7, 11, 14}, {9, 12, 15, 16}}));
    CHECK(tlab::promote_power(r2, 8) == r2);

    SkewTableau pieces_union =
        skew({5, 5, 3, 3}, {3, 3}, {{2, 7}, {3, 8}, {1, 4, 9}, {5, 6, 10}});
    CHECK(tlab::promote_power(pieces_union, 5) == pieces_union);
    SkewTableau r2u = tlab::construct_R2(pieces_union);
    CHECK(r2u == tlab::straight_tableau({{1, 2, 7, 12, 17},
                                         {3, 6, 8, 13, 18},
                                         {4, 9, 11, 14, 19},
                                         {5, 10, 15, 16, 20}}));
    CHECK(tlab::promote_power(r2u, 5) == r2u);
}

TEST_CASE("two copy construction surjects onto fixed squares for small parameters") {
    std::set<SkewTableau> image21;
    for (const SkewTableau& s : tlab::enumerate_syt(tlab::two_block_shape(2, 1)))
        image21.insert(tlab::construct_R2(s));
    std::vector<SkewTableau> fixed21 = tlab::enumerate_fixed(2, 2, 2);
    CHECK(image21 == std::set<SkewTableau>(fixed21.begin(), fixed21.end()));

    std::set<SkewTableau> image22;
    for (const SkewTableau& s : tlab::enumerate_syt(tlab::two_block_shape(2, 2)))
        image22.insert(tlab::construct_R2(s));
    std::vector<SkewTableau> fixed22 = tlab::enumerate_fixed(4, 2, 4);
    CHECK(image22.size() == 6);
    CHECK(image22 == std::set<SkewTableau>(fixed22.begin(), fixed22.end()));
}

TEST_CASE("cyclic sieving evaluation on the two by two square") {
    std::vector<long long> expected = {2, 0, 2, 0};
    std::vector<int> orders = {1, 4, 2, 4};
    for (int k = 0; k < 4; ++k) {
        CAPTURE(k);
        tlab::CspReport rep = tlab::csp_evaluate(2, 2, k);
        CHECK(rep.n == 4);
        CHECK(rep.k == k);
        CHECK(rep.root_order == orders[k]);
        CHECK(rep.fixed_count == expected[k]);
        CHECK(rep.poly_value == expected[k]);
        CHECK(rep.residual < 1e-6);
    }
}

TEST_CASE("permutation stabilization values and bounds") {
    CHECK(tlab::stab_of_permutation({4, 2, 3, 1}) == 3);
    CHECK(tlab::stab_of_permutation({4, 1, 2, 3}) == 3);
    CHECK(tlab::stab_of_permutation({4, 3, 2, 1}) == 1);
    CHECK(tlab::stab_of_permutation({1, 2, 3, 4}) == 4);

    // one descent splits the word into two falling runs; all such words sit at 2
    for (int k = 1; k <= 4; ++k) {
        Word w;
        for (int v = k; v >= 1; --v) w.push_back(v);
        for (int v = 5; v >= k + 1; --v) w.push_back(v);
        CHECK(tlab::stab_of_permutation(w) == 2);
    }

    for (int n = 2; n <= 5; ++n) {
        for (const Word& w : all_permutations(n)) {
            CAPTURE(w);
            int ascents = 0;
            for (int i = 0; i + 1 < n; ++i)
                if (w[i] < w[i + 1]) ++ascents;
            int st = tlab::stab_of_permutation(w);
            CHECK(st > ascents);
            bool reversed = std::is_sorted(w.rbegin(), w.rend());
            CHECK((st == 1) == reversed);
            bool identity = std::is_sorted(w.begin(), w.end());
            CHECK((st == n) == identity);
        }
    }
}

TEST_CASE("stabilization distribution matches the frozen triangle and brute force") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        std::vector<long long> row = tlab::stab_distribution(n);
        CHECK(row == tlab::reference_stab_row(n));
        long long total = 0;
        for (long long v : row) total += v;
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(total == fact);
        CHECK(row[1] == tlab::stab2_count(n));
        if (n <= 5) CHECK(row == tlab::stab_distribution_direct(n));
    }
    CHECK(tlab::stab_distribution(5, 4) == tlab::stab_distribution(5));
    CHECK(tlab::reference_stab_row(5) == std::vector<long long>{1, 18, 63, 37, 1});
    CHECK(tlab::reference_stab_row(9).empty());
}

TEST_CASE("closed form for stabilization exactly two") {
    CHECK(tlab::stab2_count(3) == 4);
    CHECK(tlab::stab2_count(4) == 8);
    CHECK(tlab::stab2_count(8) == 124);
    for (int n = 2; n <= 10; ++n)
        CHECK(tlab::stab2_count(n) == tlab::binomial(n + 1, (n + 1) / 2) - 2);
}

TEST_CASE("low stabilization is characterized by the recording tableau") {
    const int n = 5;
    std::set<SkewTableau> targets;
    for (int k = 1; k <= n; ++k) {
        Word w;
        for (int v = k; v >= 1; --v) w.push_back(v);
        for (int v = n; v >= k + 1; --v) w.push_back(v);
        tlab::InsertionPair pq = tlab::rsk(w);
        CHECK(pq.p == pq.q);
        targets.insert(pq.q);
    }
    for (const Word& w : all_permutations(n)) {
        CAPTURE(w);
        bool low = tlab::stab_of_permutation(w) <= 2;
        bool recorded = targets.count(tlab::rsk(w).q) == 1;
        CHECK(low == recorded);
    }
}
