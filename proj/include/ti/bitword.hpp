#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ti {

/// 128-bit word over GF(2). Bit i is data qubit i (or stabiliser i when the
/// word indexes generators). Widths up to 128 are supported; bits at or above
/// the active width must stay zero, which every operation here preserves as
/// long as masks are built through set()/from_indices().
struct BitWord {
    uint64_t lo = 0;
    uint64_t hi = 0;

    static constexpr int max_bits = 128;

    constexpr BitWord() = default;
    constexpr BitWord(uint64_t lo_, uint64_t hi_) : lo(lo_), hi(hi_) {}

    constexpr bool test(int i) const {
        return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
    }
    constexpr void set(int i, bool v = true) {
        uint64_t bit = uint64_t(1) << (i & 63);
        uint64_t& w = i < 64 ? lo : hi;
        w = v ? (w | bit) : (w & ~bit);
    }
    constexpr bool any() const { return (lo | hi) != 0; }

    friend constexpr BitWord operator^(BitWord a, BitWord b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
    friend constexpr BitWord operator&(BitWord a, BitWord b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend constexpr BitWord operator|(BitWord a, BitWord b) { return {a.lo | b.lo, a.hi | b.hi}; }
    constexpr BitWord& operator^=(BitWord b) { lo ^= b.lo; hi ^= b.hi; return *this; }
    constexpr BitWord& operator&=(BitWord b) { lo &= b.lo; hi &= b.hi; return *this; }
    constexpr BitWord& operator|=(BitWord b) { lo |= b.lo; hi |= b.hi; return *this; }
    friend constexpr bool operator==(BitWord a, BitWord b) { return a.lo == b.lo && a.hi == b.hi; }
    friend constexpr bool operator!=(BitWord a, BitWord b) { return !(a == b); }
};

/// Number of set bits.
constexpr int hamming(BitWord w) {
    return std::popcount(w.lo) + std::popcount(w.hi);
}

/// popcount(w AND mask) mod 2.
constexpr int masked_parity(BitWord w, BitWord mask) {
    return hamming(w & mask) & 1;
}

/// Index of the lowest set bit; 128 when the word is zero.
constexpr int lowest_bit(BitWord w) {
    if (w.lo != 0) return std::countr_zero(w.lo);
    if (w.hi != 0) return 64 + std::countr_zero(w.hi);
    return BitWord::max_bits;
}

/// Order as bit strings read qubit-0 first (bit 0 is the most significant
/// digit). This is the "numeric" order of eigenvalue strings printed z_0..z_{N-1}.
constexpr bool lex_less(BitWord a, BitWord b) {
    BitWord diff = a ^ b;
    if (!diff.any()) return false;
    return !a.test(lowest_bit(diff));
}

inline BitWord from_indices(const std::vector<int>& idx) {
    BitWord w;
    for (int i : idx) w.set(i);
    return w;
}

inline std::vector<int> to_indices(BitWord w, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (w.test(i)) out.push_back(i);
    return out;
}

/// Render as '0'/'1' string, qubit 0 leftmost.
inline std::string to_bit_string(BitWord w, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (w.test(i)) s[static_cast<size_t>(i)] = '1';
    return s;
}

/// Parse a '0'/'1' string, leftmost char = bit 0.
inline BitWord parse_bit_string(std::string_view s) {
    if (s.size() > BitWord::max_bits)
        throw std::invalid_argument("bit string longer than 128 bits");
    BitWord w;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w.set(static_cast<int>(i));
        else if (s[i] != '0')
            throw std::invalid_argument("bit string must contain only 0/1");
    }
    return w;
}

struct BitWordHash {
    size_t operator()(const BitWord& w) const {
        uint64_t x = w.lo * 0x9e3779b97f4a7c15ull;
        x ^= (w.hi + 0x632be59bd9b4e019ull) * 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return static_cast<size_t>(x);
    }
};

/// A bit vector with an explicit length, for stabiliser outcome strings whose
/// width matters (trajectory halves, Z-outcome vectors).
struct Bits {
    BitWord word;
    int size = 0;

    Bits() = default;
    Bits(BitWord w, int n) : word(w), size(n) {}

    static Bits parse(std::string_view s) {
        return {parse_bit_string(s), static_cast<int>(s.size())};
    }
    std::string str() const { return to_bit_string(word, size); }
    bool test(int i) const { return word.test(i); }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.size == b.size && a.word == b.word;
    }
};

}  // namespace ti
