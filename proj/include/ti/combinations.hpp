#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ti/bitword.hpp"

namespace ti {

/// Streams every subset of a fixed index list whose size has the requested
/// parity, as bitmasks, in size-then-lexicographic order: sizes parity,
/// parity+2, ... and within a size the k-subsets of the ascending index list
/// in lexicographic order of their index tuples.
///
/// combinations({0,2,3}, 0) yields {}, {0,2}, {0,3}, {2,3}.
class CombinationStream {
  public:
    CombinationStream(std::vector<int> indices, int parity)
        : indices_(std::move(indices)), parity_(parity & 1) {
        std::sort(indices_.begin(), indices_.end());
        if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
            throw std::invalid_argument("combination indices must be distinct");
        size_ = static_cast<int>(indices_.size());
        reset();
    }

    void reset() {
        k_ = parity_;
        done_ = k_ > size_;
        if (!done_) init_positions();
    }

    /// Emits the next subset mask; false once exhausted.
    bool next(BitWord& out) {
        if (done_) return false;
        out = current_mask();
        advance();
        return true;
    }

    /// Total number of subsets this stream yields: 2^(n-1) for n >= 1,
    /// else 1 or 0 depending on parity.
    uint64_t count() const {
        if (size_ == 0) return parity_ == 0 ? 1 : 0;
        return uint64_t(1) << (size_ - 1);
    }

    /// All subsets collected eagerly. The per-stabiliser lists in the coset
    /// enumeration have at most four indices, so this stays tiny there.
    std::vector<BitWord> collect() {
        std::vector<BitWord> out;
        reset();
        BitWord w;
        while (next(w)) out.push_back(w);
        return out;
    }

  private:
    void init_positions() {
        pos_.resize(static_cast<size_t>(k_));
        for (int i = 0; i < k_; ++i) pos_[static_cast<size_t>(i)] = i;
    }

    BitWord current_mask() const {
        BitWord w;
        for (int p : pos_) w.set(indices_[static_cast<size_t>(p)]);
        return w;
    }

    void advance() {
        // next k-combination in lexicographic position order
        int j = k_ - 1;
        while (j >= 0 && pos_[static_cast<size_t>(j)] == size_ - k_ + j) --j;
        if (j < 0) {
            k_ += 2;
            if (k_ > size_) {
                done_ = true;
                return;
            }
            init_positions();
            return;
        }
        ++pos_[static_cast<size_t>(j)];
        for (int i = j + 1; i < k_; ++i)
            pos_[static_cast<size_t>(i)] = pos_[static_cast<size_t>(i - 1)] + 1;
    }

    std::vector<int> indices_;
    int parity_;
    int size_ = 0;
    int k_ = 0;
    bool done_ = false;
    std::vector<int> pos_;
};

/// Subsets of either parity, sizes ascending and lexicographic within a size.
/// Used for qubits unconstrained by any stabiliser.
inline std::vector<BitWord> all_subsets_by_size(const std::vector<int>& indices) {
    std::vector<BitWord> even = CombinationStream(indices, 0).collect();
    std::vector<BitWord> odd = CombinationStream(indices, 1).collect();
    std::vector<BitWord> out;
    out.reserve(even.size() + odd.size());
    size_t e = 0, o = 0;
    for (int k = 0; k <= static_cast<int>(indices.size()); ++k) {
        auto& src = (k & 1) ? odd : even;
        size_t& cursor = (k & 1) ? o : e;
        while (cursor < src.size() && hamming(src[cursor]) == k) out.push_back(src[cursor++]);
    }
    return out;
}

}  // namespace ti
