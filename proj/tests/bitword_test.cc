#include "ti/bitword.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ti/combinations.hpp"
#include "test_util.hh"

using namespace ti;

TEST(BitWord, HammingFixtures) {
    EXPECT_EQ(hamming(parse_bit_string("00000")), 0);
    EXPECT_EQ(hamming(parse_bit_string("11101")), 4);
    EXPECT_EQ(hamming(parse_bit_string("10011")), 3);
}

TEST(BitWord, MaskedParityFixtures) {
    BitWord logical_z = parse_bit_string("11000");
    EXPECT_EQ(masked_parity(parse_bit_string("00001"), logical_z), 0);
    EXPECT_EQ(masked_parity(parse_bit_string("01000"), logical_z), 1);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        BitWord w{rng(), rng()};
        EXPECT_EQ(masked_parity(w, BitWord{}), 0);
    }
}

TEST(BitWord, XorParityConsistency) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        BitWord a{rng(), rng()}, b{rng(), rng()};
        EXPECT_EQ(hamming(a ^ b) & 1, (hamming(a) + hamming(b)) & 1);
    }
}

TEST(BitWord, StringRoundTripAndHighBitsStayZero) {
    std::mt19937_64 rng(17);
    for (int n : {1, 5, 13, 64, 113, 128}) {
        BitWord w = tu::random_bits(n, rng).word;
        EXPECT_EQ(parse_bit_string(to_bit_string(w, n)), w);
        // no operation reaches past the active width
        BitWord m = tu::random_bits(n, rng).word;
        for (BitWord r : {w ^ m, w & m, w | m})
            for (int i = n; i < BitWord::max_bits; ++i) EXPECT_FALSE(r.test(i));
    }
    EXPECT_THROW(parse_bit_string("01x"), std::invalid_argument);
}

TEST(BitWord, LexOrderReadsBitZeroFirst) {
    EXPECT_TRUE(lex_less(parse_bit_string("00001"), parse_bit_string("00110")));
    EXPECT_TRUE(lex_less(parse_bit_string("00110"), parse_bit_string("11010")));
    EXPECT_FALSE(lex_less(parse_bit_string("11010"), parse_bit_string("00110")));
    EXPECT_FALSE(lex_less(BitWord{}, BitWord{}));
}

TEST(Combinations, SizeThenLexOrder) {
    auto even = CombinationStream({0, 2, 3}, 0).collect();
    ASSERT_EQ(even.size(), 4u);
    EXPECT_EQ(even[0], BitWord{});
    EXPECT_EQ(even[1], from_indices({0, 2}));
    EXPECT_EQ(even[2], from_indices({0, 3}));
    EXPECT_EQ(even[3], from_indices({2, 3}));

    auto odd = CombinationStream({1, 4}, 1).collect();
    ASSERT_EQ(odd.size(), 2u);
    EXPECT_EQ(odd[0], from_indices({1}));
    EXPECT_EQ(odd[1], from_indices({4}));

    EXPECT_TRUE(CombinationStream({}, 1).collect().empty());
    EXPECT_EQ(CombinationStream({}, 0).collect(), std::vector<BitWord>{BitWord{}});
}

TEST(Combinations, ParityPairCoversPowerSetOnce) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < n) picked.insert(static_cast<int>(rng() % 30));
        std::vector<int> idx(picked.begin(), picked.end());

        auto even = CombinationStream(idx, 0);
        auto odd = CombinationStream(idx, 1);
        EXPECT_EQ(even.count() + odd.count(), uint64_t(1) << n);

        std::set<std::pair<uint64_t, uint64_t>> seen;
        for (BitWord w : even.collect()) seen.insert({w.hi, w.lo});
        for (BitWord w : odd.collect()) seen.insert({w.hi, w.lo});
        EXPECT_EQ(seen.size(), size_t(1) << n);
    }
}

TEST(Combinations, RejectsDuplicateIndices) {
    EXPECT_THROW(CombinationStream({1, 1, 2}, 0), std::invalid_argument);
}
