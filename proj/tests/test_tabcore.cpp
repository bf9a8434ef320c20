#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tlab/partition.hpp>
#include <tlab/tableau.hpp>

#include <set>
#include <stdexcept>
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

}  // namespace

TEST_CASE("partition normalization and validity") {
    CHECK(tlab::normalized_partition({3, 2, 0, 0}) == Partition{{3, 2}});
    CHECK(tlab::normalized_partition({}) == Partition{});
    CHECK_THROWS_AS(tlab::normalized_partition({3, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(tlab::normalized_partition({-1}), std::invalid_argument);
    CHECK(tlab::is_valid_partition(Partition{{5, 5, 2}}));
    CHECK_FALSE(tlab::is_valid_partition(Partition{{2, 5}}));
    CHECK_FALSE(tlab::is_valid_partition(Partition{{2, 0}}));
}

TEST_CASE("partition accessors and containment") {
    Partition p{{7, 5, 5, 5, 3, 2, 1}};
    CHECK(p.rows() == 7);
    CHECK(p.size() == 28);
    CHECK(p.at(1) == 7);
    CHECK(p.at(7) == 1);
    CHECK(p.at(8) == 0);
    CHECK(tlab::contains(p, Partition{{5, 5, 1}}));
    CHECK_FALSE(tlab::contains(p, Partition{{8}}));
    CHECK_FALSE(tlab::contains(Partition{{2}}, Partition{{1, 1}}));
}

TEST_CASE("partition conjugate") {
    CHECK(tlab::conjugate(Partition{{4, 2, 1}}) == Partition{{3, 2, 1, 1}});
    CHECK(tlab::conjugate(Partition{}) == Partition{});
    CHECK(tlab::conjugate(tlab::conjugate(Partition{{6, 4, 4, 1}})) == Partition{{6, 4, 4, 1}});
}

TEST_CASE("partition ordering is lexicographic on parts") {
    Partition a{{2, 1}};
    Partition b{{3}};
    Partition c{{1, 1, 1, 1}};
    CHECK(tlab::partition_less(a, b));
    CHECK(tlab::partition_less(c, a));
    CHECK_FALSE(tlab::partition_less(a, a));
}

TEST_CASE("skew shape geometry with an interior empty row") {
    SkewShape s{Partition{{7, 5, 5, 3}}, Partition{{5, 5, 1}}};
    CHECK(tlab::is_valid_shape(s));
    CHECK(s.rows() == 4);
    CHECK(s.size() == 9);
    CHECK(s.row_length(1) == 2);
    CHECK(s.row_length(2) == 0);
    CHECK(s.row_length(3) == 4);
    CHECK(s.row_length(4) == 3);
    CHECK_FALSE(s.is_straight());
    CHECK(SkewShape{Partition{{3, 2}}, Partition{}}.is_straight());
    // inner must fit inside outer
    CHECK_FALSE(tlab::is_valid_shape(SkewShape{Partition{{3}}, Partition{{4}}}));
}

TEST_CASE("standard skew tableau with an empty row") {
    SkewTableau s = skew({7, 5, 5, 3}, {5, 5, 1}, {{1, 7}, {}, {2, 4, 6, 9}, {3, 5, 8}});
    CHECK(tlab::is_standard(s));
    CHECK(s.size() == 9);
    CHECK(tlab::row_vector(s) == std::vector<int>{2, 0, 4, 3});
    CHECK(tlab::reading_word(s) == Word{3, 5, 8, 2, 4, 6, 9, 1, 7});
    CHECK(tlab::descent_set(s) == std::set<int>{1, 2, 4, 7});
    CHECK(tlab::descent_set(tlab::reading_word(s)) == std::set<int>{3, 7});
}

TEST_CASE("tableau validation rejects bad fillings") {
    // row sizes must match the shape
    CHECK_THROWS_AS(skew({2, 1}, {}, {{1, 2, 3}}), std::invalid_argument);
    // rows strictly increase
    CHECK_THROWS_AS(skew({2}, {}, {{2, 1}}), std::invalid_argument);
    // columns strictly increase, here col 1 has 3 above 2
    CHECK_THROWS_AS(skew({2, 2}, {}, {{3, 4}, {2, 5}}), std::invalid_argument);
    // standard means entries exactly 1..n
    SkewTableau t = skew({2}, {}, {{1, 3}});
    CHECK(tlab::is_valid_tableau(t));
    CHECK_FALSE(tlab::is_standard(t));
    CHECK_THROWS_AS(tlab::validate_standard(t), std::invalid_argument);
    // skew column overlap: col 2 entries 5 over 3 is invalid
    CHECK_THROWS_AS(skew({2, 2}, {1}, {{5}, {3, 4}}), std::invalid_argument);
}

TEST_CASE("descents of words") {
    CHECK(tlab::descent_set(Word{3, 5, 8, 2, 4, 6, 9, 1, 7}) == std::set<int>{3, 7});
    CHECK(tlab::descent_set(Word{1, 2, 3}) == std::set<int>{});
    CHECK(tlab::descent_set(Word{3, 2, 1}) == std::set<int>{1, 2});
    CHECK(tlab::is_permutation_word(Word{2, 4, 1, 3}));
    CHECK_FALSE(tlab::is_permutation_word(Word{2, 2, 1}));
    CHECK_FALSE(tlab::is_permutation_word(Word{2, 3}));
}

TEST_CASE("conjugate transposes the filling") {
    SkewTableau t = tlab::straight_tableau({{1, 2, 4}, {3, 5}, {6}});
    SkewTableau c = tlab::conjugate(t);
    CHECK(c.shape.outer == Partition{{3, 2, 1}});
    CHECK(c.rows == std::vector<std::vector<int>>{{1, 3, 6}, {2, 5}, {4}});
    CHECK(tlab::conjugate(c) == t);

    SkewTableau s = skew({2, 2}, {1}, {{2}, {1, 3}});
    SkewTableau sc = tlab::conjugate(s);
    CHECK(sc.shape.outer == Partition{{2, 2}});
    CHECK(sc.shape.inner == Partition{{1}});
    CHECK(sc.rows == std::vector<std::vector<int>>{{1}, {2, 3}});
    CHECK(tlab::conjugate(sc) == s);
}

TEST_CASE("dagger rotates and reverses entries") {
    SkewTableau t = skew({2, 2}, {1}, {{2}, {1, 3}});
    SkewTableau d = tlab::dagger(t);
    CHECK(d.shape.outer == Partition{{2, 1}});
    CHECK(d.shape.inner == Partition{});
    CHECK(d.rows == std::vector<std::vector<int>>{{1, 3}, {2}});
    // involution up to the canonical position of the rotated shape
    CHECK(tlab::dagger(d) == t);
}

TEST_CASE("entry shifts and range restriction") {
    SkewTableau t = tlab::straight_tableau({{1, 2, 4}, {3, 5}, {6}});
    SkewTableau u = tlab::shift_entries(t, 12);
    CHECK(u.rows == std::vector<std::vector<int>>{{13, 14, 16}, {15, 17}, {18}});
    CHECK(u.shape == t.shape);

    SkewTableau mid = tlab::restrict_range(t, 3, 5);
    CHECK(mid.shape.outer == Partition{{3, 2}});
    CHECK(mid.shape.inner == Partition{{2}});
    CHECK(mid.rows == std::vector<std::vector<int>>{{4}, {3, 5}});

    // entries 2..4 of the first row plus 3 in row 2 form a skew shape
    CHECK(tlab::rows_in_range(t, 2, 4) == std::vector<std::vector<int>>{{2, 4}, {3}, {}});
    CHECK(tlab::row_counts_up_to(t, 4) == std::vector<int>{3, 1, 0});
    CHECK(tlab::row_counts_up_to(t, 0) == std::vector<int>{0, 0, 0});

    // empty selection yields the empty tableau
    CHECK(tlab::restrict_range(t, 7, 9).empty());
}

TEST_CASE("row shift equivalence matches the defining chain") {
    SkewTableau a = tlab::straight_tableau({{1, 2, 4}, {3, 5}, {6}});
    SkewTableau b = skew({5, 3, 1}, {2, 1}, {{1, 2, 4}, {3, 5}, {6}});
    SkewTableau c = skew({5, 3, 1}, {2, 1}, {{13, 14, 16}, {15, 17}, {18}});
    CHECK(tlab::row_shift_equivalent(a, b));
    CHECK(tlab::row_shift_equivalent(b, c));
    CHECK(tlab::row_shift_equivalent(a, c));
    // different row contents are inequivalent
    SkewTableau d = tlab::straight_tableau({{1, 2}, {3, 5}, {4}, {6}});
    CHECK_FALSE(tlab::row_shift_equivalent(a, d));
    // shifts must be uniform across rows
    CHECK_FALSE(tlab::row_shift_equivalent_rows({{1, 2}, {3}}, {{2, 3}, {3}}));
    // boundary empty rows are ignored, interior ones count
    CHECK(tlab::row_shift_equivalent_rows({{}, {1, 2}, {3}}, {{1, 2}, {3}, {}}));
    CHECK_FALSE(tlab::row_shift_equivalent_rows({{1, 2}, {}, {3}}, {{1, 2}, {3}}));
}

TEST_CASE("anti-diagonal canonical form") {
    SkewTableau t = tlab::antidiagonal_tableau({{4, 5, 6}, {3, 7}, {1, 2}});
    CHECK(t.shape.outer == Partition{{7, 4, 2}});
    CHECK(t.shape.inner == Partition{{4, 2}});
    CHECK(t.rows == std::vector<std::vector<int>>{{4, 5, 6}, {3, 7}, {1, 2}});
    CHECK(tlab::is_standard(t));

    // canonicalization forgets horizontal offsets only
    SkewTableau wide = skew({9, 4, 2}, {6, 2}, {{4, 5, 6}, {3, 7}, {1, 2}});
    CHECK(tlab::canonical_antidiagonal(wide) == t);
    CHECK(tlab::row_shift_equivalent(wide, t));
}

TEST_CASE("permutation tableau reverses the word down the anti-diagonal") {
    SkewTableau t = tlab::permutation_tableau({4, 2, 3, 1});
    CHECK(t.rows == std::vector<std::vector<int>>{{1}, {3}, {2}, {4}});
    CHECK(tlab::reading_word(t) == Word{4, 2, 3, 1});
    CHECK(t.shape.outer == Partition{{4, 3, 2, 1}});
    CHECK(t.shape.inner == Partition{{3, 2, 1}});
}

TEST_CASE("boundary trimming") {
    SkewTableau t = skew({4, 4, 2, 1}, {4, 2, 1, 1}, {{}, {1, 3}, {2}, {}});
    SkewTableau trimmed = tlab::trim_empty_boundary_rows(t);
    CHECK(trimmed.row_count() == 2);
    CHECK(trimmed.rows == std::vector<std::vector<int>>{{1, 3}, {2}});
    // interior empty rows survive
    SkewTableau mid = skew({7, 5, 5, 3}, {5, 5, 1}, {{1, 7}, {}, {2, 4, 6, 9}, {3, 5, 8}});
    CHECK(tlab::trim_empty_boundary_rows(mid) == mid);
}

TEST_CASE("tableau ordering is deterministic") {
    SkewTableau a = tlab::straight_tableau({{1, 2}, {3}});
    SkewTableau b = tlab::straight_tableau({{1, 3}, {2}});
    CHECK((a < b || b < a));
    CHECK_FALSE(a < a);
}
