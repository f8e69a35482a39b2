#include "ti/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ti/layout.hpp"
#include "test_util.hh"

using namespace ti;

TEST(Gf2Solver, D2Fixtures) {
    CodeLayout lay = build_layout(2);
    Gf2Solver solver(lay.x_stabs);

    auto empty = solver.solve(BitWord{});
    ASSERT_TRUE(empty.has_value());
    EXPECT_EQ(*empty, BitWord{});

    // 11101 differs from 00001 by the first vertex stabiliser
    BitWord target = parse_bit_string("11101") ^ parse_bit_string("00001");
    auto combo = solver.solve(target);
    ASSERT_TRUE(combo.has_value());
    EXPECT_EQ(*combo, from_indices({0}));
    EXPECT_EQ(solver.combine(*combo), target);
}

TEST(Gf2Solver, LogicalXOutsideSpanMatchesBruteForce) {
    CodeLayout lay = build_layout(2);
    Gf2Solver solver(lay.x_stabs);
    BitWord target = lay.logical_x;

    bool reachable = false;
    for (uint64_t m = 0; m < 4; ++m) {
        BitWord acc;
        if (m & 1) acc ^= lay.x_stabs[0];
        if (m & 2) acc ^= lay.x_stabs[1];
        if (acc == target) reachable = true;
    }
    EXPECT_FALSE(reachable);
    EXPECT_FALSE(solver.solve(target).has_value());
}

TEST(Gf2Solver, RandomSubsetsRoundTrip) {
    std::mt19937_64 rng(5);
    for (int d : {2, 3, 4}) {
        CodeLayout lay = build_layout(d);
        Gf2Solver solver(lay.x_stabs);
        EXPECT_EQ(solver.rank(), lay.half());  // surface code generators are independent
        for (int trial = 0; trial < 40; ++trial) {
            BitWord subset = tu::random_bits(lay.half(), rng).word;
            BitWord target = solver.combine(subset);
            auto solved = solver.solve(target);
            ASSERT_TRUE(solved.has_value());
            EXPECT_EQ(*solved, subset);
            EXPECT_EQ(solver.combine(*solved), target);
        }
    }
}

namespace {

// scan reference: lexicographically smallest solution, bit 0 most significant
std::optional<BitWord> lex_min_by_scan(const std::vector<BitWord>& rows, BitWord rhs, int n) {
    std::optional<BitWord> best;
    for (uint64_t v = 0; v < (uint64_t(1) << n); ++v) {
        BitWord w{v, 0};
        bool ok = true;
        for (size_t i = 0; i < rows.size(); ++i)
            if (masked_parity(w, rows[i]) != (rhs.test(static_cast<int>(i)) ? 1 : 0)) {
                ok = false;
                break;
            }
        if (ok && (!best || lex_less(w, *best))) best = w;
    }
    return best;
}

}  // namespace

TEST(LexMin, MatchesScanOnRandomSystems) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        int m = 1 + static_cast<int>(rng() % 5);
        std::vector<BitWord> rows;
        for (int i = 0; i < m; ++i) rows.push_back(tu::random_bits(n, rng).word);
        BitWord rhs = tu::random_bits(m, rng).word;

        auto expect = lex_min_by_scan(rows, rhs, n);
        auto got = lex_min_solution(rows, rhs, n);
        ASSERT_EQ(got.has_value(), expect.has_value());
        if (expect) EXPECT_EQ(*got, *expect);
    }
}

TEST(LexMin, D2FrameFixture) {
    CodeLayout lay = build_layout(2);
    std::vector<BitWord> rows = lay.z_stabs;
    rows.push_back(lay.logical_z);
    BitWord rhs;
    rhs.set(1);  // z outcomes (0,1), logical parity 0

    auto expect = lex_min_by_scan(rows, rhs, lay.num_data);
    ASSERT_TRUE(expect.has_value());
    EXPECT_EQ(*expect, parse_bit_string("00001"));
    EXPECT_EQ(*lex_min_solution(rows, rhs, lay.num_data), *expect);
}

TEST(Gf2Rank, CheckMatrixRank) {
    for (int d : {2, 3, 4, 5, 6}) {
        CodeLayout lay = build_layout(d);
        std::vector<BitWord> rows = lay.z_stabs;
        rows.push_back(lay.logical_z);
        EXPECT_EQ(gf2_rank(rows), lay.half() + 1);
    }
}
