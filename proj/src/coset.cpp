#include "ti/coset.hpp"

#include <stdexcept>

#include "ti/combinations.hpp"
#include "ti/gf2.hpp"

namespace ti {

Trajectory Trajectory::parse(std::string_view s, const CodeLayout& layout) {
    int half = layout.half();
    if (static_cast<int>(s.size()) != 2 * half)
        throw std::invalid_argument("trajectory must have " + std::to_string(2 * half) +
                                    " bits (X outcomes then Z outcomes)");
    Trajectory t;
    t.x = Bits::parse(s.substr(0, static_cast<size_t>(half)));
    t.z = Bits::parse(s.substr(static_cast<size_t>(half)));
    return t;
}

CosetStream::CosetStream(const std::vector<BitWord>& z_supports, Bits z_outcomes, int num_bits,
                         int worker, int workers)
    : worker_(worker), workers_(workers) {
    if (static_cast<int>(z_supports.size()) != z_outcomes.size)
        throw std::invalid_argument("z outcome vector length must match stabiliser count");
    if (workers_ < 1 || worker_ < 0 || worker_ >= workers_)
        throw std::invalid_argument("bad worker partition");

    BitWord seen;
    for (size_t i = 0; i < z_supports.size(); ++i) {
        Stage st;
        st.seen_mask = z_supports[i] & seen;
        st.outcome_bit = z_outcomes.test(static_cast<int>(i)) ? 1 : 0;
        std::vector<int> fresh = to_indices(z_supports[i] ^ st.seen_mask, num_bits);
        st.choices[0] = CombinationStream(fresh, 0).collect();
        st.choices[1] = CombinationStream(fresh, 1).collect();
        seen |= z_supports[i];
        stages_.push_back(std::move(st));
    }

    std::vector<int> free;
    for (int q = 0; q < num_bits; ++q)
        if (!seen.test(q)) free.push_back(q);
    if (!free.empty()) {
        Stage st;
        st.outcome_bit = -1;
        st.choices[0] = all_subsets_by_size(free);
        stages_.push_back(std::move(st));
    }

    cursor_.assign(stages_.size(), 0);
    prefix_.assign(stages_.size() + 1, BitWord{});
    parity_.assign(stages_.size(), 0);
    reset();
}

void CosetStream::reset() {
    started_ = false;
    done_ = stages_.empty() && worker_ != 0;  // empty system: one string, worker 0 owns it
}

const std::vector<BitWord>& CosetStream::choices_at(size_t stage) const {
    const Stage& st = stages_[stage];
    return st.choices[static_cast<size_t>(parity_[stage])];
}

int CosetStream::target_parity(size_t stage) const {
    const Stage& st = stages_[stage];
    if (st.outcome_bit < 0) return 0;  // free qubits, single unconstrained list
    return st.outcome_bit ^ masked_parity(prefix_[stage], st.seen_mask);
}

// Depth-first cursor walk. Stage 0 steps by the worker stride; dead branches
// (an all-seen support whose running target is odd) backtrack naturally.
bool CosetStream::next(BitWord& out) {
    if (done_) return false;
    size_t n = stages_.size();
    size_t i;
    if (!started_) {
        started_ = true;
        if (n == 0) {
            out = BitWord{};
            done_ = true;
            return true;
        }
        i = 0;
        parity_[0] = target_parity(0);
        cursor_[0] = static_cast<size_t>(worker_);
    } else {
        i = n - 1;
        cursor_[i] += (i == 0) ? static_cast<size_t>(workers_) : 1;
    }
    while (true) {
        if (cursor_[i] >= choices_at(i).size()) {
            if (i == 0) {
                done_ = true;
                return false;
            }
            --i;
            cursor_[i] += (i == 0) ? static_cast<size_t>(workers_) : 1;
            continue;
        }
        prefix_[i + 1] = prefix_[i] ^ choices_at(i)[cursor_[i]];
        if (i + 1 == n) {
            out = prefix_[n];
            return true;
        }
        ++i;
        parity_[i] = target_parity(i);
        cursor_[i] = 0;
    }
}

CosetStream enumerate_coset(const CodeLayout& layout, Bits z_outcomes, int worker, int workers) {
    if (z_outcomes.size != layout.half())
        throw std::invalid_argument("z outcome vector must have (N-1)/2 bits");
    return CosetStream(layout.z_stabs, z_outcomes, layout.num_data, worker, workers);
}

Frame coset_representatives(const CodeLayout& layout, Bits z_outcomes) {
    if (z_outcomes.size != layout.half())
        throw std::invalid_argument("z outcome vector must have (N-1)/2 bits");
    std::vector<BitWord> rows = layout.z_stabs;
    rows.push_back(layout.logical_z);
    BitWord rhs = z_outcomes.word;  // logical row target 0 stays unset
    auto rep0 = lex_min_solution(rows, rhs, layout.num_data);
    if (!rep0)
        throw std::logic_error("Z system inconsistent; layout stabilisers are not independent");
    return {*rep0, *rep0 ^ layout.logical_x};
}

}  // namespace ti
