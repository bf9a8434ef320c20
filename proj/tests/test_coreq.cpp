#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tlab/coreq.hpp>
#include <tlab/fixed.hpp>
#include <tlab/partition.hpp>

#include <algorithm>
#include <vector>

using tlab::BoundaryWord;
using tlab::Partition;
using tlab::SkewShape;

namespace {

std::vector<Partition> sorted(std::vector<Partition> ps) {
    std::sort(ps.begin(), ps.end(), tlab::partition_less);
    return ps;
}

}  // namespace

TEST_CASE("boundary words trace the profile from the southwest") {
    CHECK(tlab::boundary_word(Partition{{7, 5, 5, 5, 3, 2, 1}}) ==
          BoundaryWord{{1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0}});
    CHECK(tlab::boundary_word(Partition{}) == BoundaryWord{});
    CHECK(tlab::boundary_word(Partition{{1}}) == BoundaryWord{{1, 0}});
    CHECK(tlab::boundary_word(Partition{{3}}) == BoundaryWord{{1, 1, 1, 0}});
}

TEST_CASE("boundary words round-trip") {
    std::vector<Partition> cases = {
        Partition{}, Partition{{1}}, Partition{{4, 4}}, Partition{{7, 5, 5, 5, 3, 2, 1}},
        Partition{{2, 1, 1, 1}}};
    for (const Partition& p : cases) {
        CHECK(tlab::partition_from_boundary(tlab::boundary_word(p)) == p);
    }
    // leading up-steps and trailing right-steps carry no cells
    CHECK(tlab::partition_from_boundary(BoundaryWord{{0, 0, 1, 0, 1, 1}}) == Partition{{1}});
    CHECK(tlab::partition_from_boundary(BoundaryWord{{0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1}}) ==
          Partition{{1}});
    CHECK_THROWS_AS(tlab::partition_from_boundary(BoundaryWord{{2}}), std::invalid_argument);
}

TEST_CASE("quotient of the seven-row example") {
    Partition p{{7, 5, 5, 5, 3, 2, 1}};
    tlab::QuotientDecomposition q = tlab::quotient(p, 3);
    REQUIRE(q.pieces.size() == 3);
    CHECK(q.pieces[0] == Partition{{2, 1}});
    CHECK(q.pieces[1] == Partition{{2, 2}});
    CHECK(q.pieces[2] == Partition{{1, 1}});
    CHECK(q.core == Partition{{1}});
    // size bookkeeping: |p| = |core| + r * total quotient size
    long long pieces_size = 0;
    for (const Partition& piece : q.pieces) pieces_size += piece.size();
    CHECK(p.size() == q.core.size() + 3 * pieces_size);
}

TEST_CASE("cores are idempotent and quotient-free") {
    Partition p{{7, 5, 5, 5, 3, 2, 1}};
    for (int r = 2; r <= 5; ++r) {
        Partition core = tlab::quotient(p, r).core;
        tlab::QuotientDecomposition again = tlab::quotient(core, r);
        CHECK(again.core == core);
        for (const Partition& piece : again.pieces) CHECK(piece.empty());
    }
}

TEST_CASE("trivial quotients") {
    Partition p{{4, 2, 1}};
    tlab::QuotientDecomposition q1 = tlab::quotient(p, 1);
    REQUIRE(q1.pieces.size() == 1);
    CHECK(q1.pieces[0] == p);
    CHECK(q1.core.empty());
    // a modulus beyond the hook lengths leaves everything in the core
    tlab::QuotientDecomposition big = tlab::quotient(Partition{{2, 2}}, 4);
    CHECK(big.core == Partition{{2, 2}});
    CHECK_THROWS_AS(tlab::quotient(p, 0), std::invalid_argument);
}

TEST_CASE("rectangle quotients in closed form") {
    CHECK(tlab::rectangle_quotient(2, 5, 1) ==
          std::vector<Partition>{Partition{{1, 1, 1}}, Partition{{1, 1}}});
    CHECK(tlab::rectangle_quotient(2, 4, 2) ==
          std::vector<Partition>{Partition{{2, 2}}, Partition{{2, 2}}});
    // elongated rectangles have empty cores and pure-row quotients
    CHECK(tlab::rectangle_quotient(3, 2, 2) ==
          std::vector<Partition>{Partition{{2}}, Partition{{2}}, Partition{}});
}

TEST_CASE("closed-form rectangle quotients match the direct computation") {
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (int r = 1; r <= 2; ++r) {
                Partition rect{std::vector<int>(static_cast<size_t>(b), a * r)};
                tlab::QuotientDecomposition q = tlab::quotient(rect, a);
                CHECK(q.core.empty());
                CHECK(sorted(q.pieces) == sorted(tlab::rectangle_quotient(a, b, r)));
            }
        }
    }
}

TEST_CASE("rectangle core emptiness matches the divisibility rule") {
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            for (int r = 1; r <= 6; ++r) {
                if ((a * b) % r != 0) continue;
                Partition rect{std::vector<int>(static_cast<size_t>(b), a)};
                bool direct = tlab::quotient(rect, r).core.empty();
                CHECK(tlab::empty_core_rectangle(a, b, r) == direct);
                CHECK(tlab::empty_core_rectangle(a, b, r) == (a % r == 0 || b % r == 0));
            }
        }
    }
    CHECK_THROWS_AS(tlab::empty_core_rectangle(3, 3, 2), std::invalid_argument);
}

TEST_CASE("anti-diagonal unions stack pieces corner to corner") {
    SkewShape u = tlab::antidiagonal_union(
        {Partition{{2, 1}}, Partition{{2, 2}}, Partition{{1, 1}}});
    CHECK(u.outer == Partition{{5, 5, 4, 4, 2, 1}});
    CHECK(u.inner == Partition{{4, 4, 2, 2}});
    CHECK(u.size() == 9);

    SkewShape single = tlab::antidiagonal_union({Partition{{3, 1}}});
    CHECK(single.outer == Partition{{3, 1}});
    CHECK(single.inner == Partition{});

    CHECK(tlab::antidiagonal_union({}).size() == 0);
}

TEST_CASE("quotient pieces assemble to the block shape used downstream") {
    // two single-cell pieces: a 2x2 anti-diagonal
    SkewShape two = tlab::antidiagonal_union({Partition{{1}}, Partition{{1}}});
    CHECK(two.outer == Partition{{2, 1}});
    CHECK(two.inner == Partition{{1}});
    CHECK(tlab::block_antidiagonal_shape(2, 1) == two);
    CHECK(tlab::two_block_shape(2, 1) == two);
    // taller piece sits southwest
    SkewShape gamma = tlab::two_block_shape(3, 2);
    CHECK(gamma.outer == Partition{{4, 2, 2}});
    CHECK(gamma.inner == Partition{{2}});
    CHECK(tlab::two_block_pieces(3, 2) ==
          std::vector<Partition>{Partition{{2, 2}}, Partition{{2}}});
}
