#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ti/bitword.hpp"
#include "ti/layout.hpp"

namespace ti {

/// One initialisation run's measurement outcomes: X-stabiliser bits then
/// Z-stabiliser bits, each of length (N-1)/2. The string form concatenates
/// them left to right in that order.
struct Trajectory {
    Bits x;
    Bits z;

    static Trajectory parse(std::string_view s, const CodeLayout& layout);
    std::string str() const { return x.str() + z.str(); }

    bool trivial_x() const { return !x.word.any(); }

    friend bool operator==(const Trajectory& a, const Trajectory& b) {
        return a.x == b.x && a.z == b.z;
    }
};

/// Streams the affine GF(2) solution set of M_Z z = s in deterministic order:
/// stabilisers are processed in layout order; for stabiliser i the support
/// splits into indices fixed by earlier stabilisers and fresh ones, the fresh
/// indices are extended by every combination whose size parity matches the
/// running target, combinations ordered size-then-lexicographic. Qubits in no
/// support (none for this code family) are enumerated free at the end.
///
/// A stream partitioned as worker k of K covers the first-stage combination
/// indices congruent to k mod K; partitions are disjoint and cover the
/// unpartitioned stream.
class CosetStream {
  public:
    CosetStream(const std::vector<BitWord>& z_supports, Bits z_outcomes, int num_bits,
                int worker = 0, int workers = 1);

    /// Emits the next consistent eigenvalue string; false once exhausted.
    bool next(BitWord& out);

    void reset();

  private:
    struct Stage {
        BitWord seen_mask;                        // support bits fixed earlier
        int outcome_bit;                          // target parity source, -1 for free qubits
        std::array<std::vector<BitWord>, 2> choices;  // per parity t
    };

    const std::vector<BitWord>& choices_at(size_t stage) const;
    int target_parity(size_t stage) const;

    std::vector<Stage> stages_;
    std::vector<size_t> cursor_;  // per-stage choice index
    std::vector<BitWord> prefix_;  // word accumulated before each stage
    std::vector<int> parity_;      // running parity target per stage
    int worker_ = 0;
    int workers_ = 1;
    bool started_ = false;
    bool done_ = false;
};

/// The coset stream for a layout; rejects wrong-length outcome vectors.
CosetStream enumerate_coset(const CodeLayout& layout, Bits z_outcomes,
                            int worker = 0, int workers = 1);

/// Orbit representatives fixing the Pauli frame: rep0 is the numerically
/// smallest coset element with even logical-Z parity (bit strings compared
/// qubit-0 first); rep1 = rep0 XOR logical_x.
struct Frame {
    BitWord rep0;
    BitWord rep1;
};

Frame coset_representatives(const CodeLayout& layout, Bits z_outcomes);

}  // namespace ti
