#pragma once

#include <optional>
#include <vector>

#include "ti/bitword.hpp"

namespace ti {

/// GF(2) span solver over a fixed set of generator supports. solve() writes a
/// target word as an XOR of generators and returns the chosen subset as a mask
/// over generator indices, or nullopt when the target is outside the span.
class Gf2Solver {
  public:
    explicit Gf2Solver(std::vector<BitWord> generators);

    /// Subset mask g with XOR of supports(g) == target, or not-in-span.
    std::optional<BitWord> solve(BitWord target) const;

    /// XOR of the generator supports selected by a subset mask.
    BitWord combine(BitWord subset) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<BitWord>& generators() const { return generators_; }

  private:
    struct EchelonRow {
        int pivot;
        BitWord row;    // reduced support
        BitWord combo;  // generator subset producing `row`
    };
    std::vector<BitWord> generators_;
    std::vector<EchelonRow> rows_;  // pivot-ascending
};

/// Lexicographically smallest solution of `rows * z = rhs` over GF(2), where
/// row i is a support mask, rhs bit i its parity target, and "smallest" reads
/// the solution as a bit string with bit 0 most significant. nullopt when the
/// system is inconsistent.
std::optional<BitWord> lex_min_solution(const std::vector<BitWord>& rows, BitWord rhs, int num_bits);

/// Rank of a set of support masks over GF(2).
int gf2_rank(const std::vector<BitWord>& rows);

}  // namespace ti
