#include "ti/projector.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "ti/gf2.hpp"

namespace ti {

namespace {

// Supports of all 2^half generator subsets, indexed by subset mask.
std::vector<BitWord> group_supports(const std::vector<BitWord>& gens) {
    size_t count = size_t(1) << gens.size();
    std::vector<BitWord> sup(count);
    for (size_t m = 1; m < count; ++m) {
        int low = std::countr_zero(m);
        sup[m] = sup[m & (m - 1)] ^ gens[static_cast<size_t>(low)];
    }
    return sup;
}

int subset_sign(uint64_t subset_mask, uint64_t x_mask) {
    return (std::popcount(subset_mask & x_mask) & 1) ? -1 : 1;
}

void check_trajectory(const CodeLayout& layout, const Trajectory& t) {
    if (t.x.size != layout.half() || t.z.size != layout.half())
        throw std::invalid_argument("trajectory size does not match layout");
}

}  // namespace

OrbitTable orbit_signs(const CodeLayout& layout, BitWord x_outcomes, BitWord rep) {
    int half = layout.half();
    if (half > 20)
        throw std::invalid_argument("orbit expansion is limited to (N-1)/2 <= 20 generators");
    auto sup = group_supports(layout.x_stabs);
    uint64_t x_mask = x_outcomes.lo;
    OrbitTable table;
    table.sign.reserve(sup.size());
    for (uint64_t m = 0; m < sup.size(); ++m)
        table.sign.emplace(rep ^ sup[m], subset_sign(m, x_mask));
    return table;
}

namespace {

struct WorkerAccumulator {
    AmplitudePoly s0;
    AmplitudePoly s1;
};

// Solver engine: each coset element's group factor relative to its orbit
// representative comes from GF(2) elimination over the X supports. Trivial X
// outcomes short-circuit to a parity-split sum, every sign being +1.
void solver_span(const CodeLayout& layout, const Trajectory& traj, const Frame& frame,
                 const Gf2Solver& solver, int worker, int workers, WorkerAccumulator& acc) {
    CosetStream stream = enumerate_coset(layout, traj.z, worker, workers);
    const bool trivial = traj.trivial_x();
    BitWord x_word = traj.x.word;
    BitWord w;
    while (stream.next(w)) {
        int orbit = masked_parity(w, layout.logical_z);
        AmplitudePoly& poly = orbit ? acc.s1 : acc.s0;
        if (trivial) {
            poly.add_term(hamming(w), 1);
            continue;
        }
        auto combo = solver.solve(w ^ (orbit ? frame.rep1 : frame.rep0));
        if (!combo)
            throw std::logic_error("coset element outside the X-group orbit of its representative");
        poly.add_term(hamming(w), masked_parity(*combo, x_word) ? -1 : 1);
    }
}

// Expansion engine: walk every (coset element, group element) pair, route the
// signed image through the orbit tables, and divide the group order back out.
void expansion_span(const CodeLayout& layout, const Trajectory& traj,
                    const std::vector<BitWord>& sup, const OrbitTable& orbit0,
                    const OrbitTable& orbit1, int worker, int workers, WorkerAccumulator& acc) {
    CosetStream stream = enumerate_coset(layout, traj.z, worker, workers);
    uint64_t x_mask = traj.x.word.lo;
    BitWord w;
    while (stream.next(w)) {
        int weight = hamming(w);
        for (uint64_t m = 0; m < sup.size(); ++m) {
            BitWord image = w ^ sup[m];
            int s = subset_sign(m, x_mask);
            if (int s0 = orbit0.at(image); s0 != 0)
                acc.s0.add_term(weight, s * s0);
            else if (int s1 = orbit1.at(image); s1 != 0)
                acc.s1.add_term(weight, s * s1);
            else
                throw std::logic_error("projected image escaped both logical orbits");
        }
    }
}

}  // namespace

ProjectionResult project(const CodeLayout& layout, const Trajectory& trajectory,
                         const ProjectOptions& options) {
    check_trajectory(layout, trajectory);
    int workers = options.workers < 1 ? 1 : options.workers;

    Frame frame;
    if (options.rep0_override) {
        BitWord rep = *options.rep0_override;
        if (masked_parity(rep, layout.logical_z) != 0)
            throw std::invalid_argument("rep0 override must have even logical parity");
        for (size_t i = 0; i < layout.z_stabs.size(); ++i)
            if (masked_parity(rep, layout.z_stabs[i]) != (trajectory.z.test(static_cast<int>(i)) ? 1 : 0))
                throw std::invalid_argument("rep0 override is not in the measured coset");
        frame = {rep, rep ^ layout.logical_x};
    } else {
        frame = coset_representatives(layout, trajectory.z);
    }

    std::vector<WorkerAccumulator> acc(static_cast<size_t>(workers),
                                       {AmplitudePoly(layout.num_data), AmplitudePoly(layout.num_data)});

    auto run_pool = [&](const std::function<void(int, WorkerAccumulator&)>& body) {
        if (workers == 1) {
            body(0, acc[0]);
            return;
        }
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
        for (int k = 0; k < workers; ++k)
            pool.emplace_back([&, k] {
                try {
                    body(k, acc[static_cast<size_t>(k)]);
                } catch (...) {
                    errors[static_cast<size_t>(k)] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    };

    if (options.engine == Engine::solver) {
        Gf2Solver solver(layout.x_stabs);
        run_pool([&](int k, WorkerAccumulator& a) {
            solver_span(layout, trajectory, frame, solver, k, workers, a);
        });
    } else {
        if (layout.half() > 20)
            throw std::invalid_argument("the expansion engine is limited to (N-1)/2 <= 20; use the solver engine");
        auto sup = group_supports(layout.x_stabs);
        OrbitTable orbit0 = orbit_signs(layout, trajectory.x.word, frame.rep0);
        OrbitTable orbit1 = orbit_signs(layout, trajectory.x.word, frame.rep1);
        run_pool([&](int k, WorkerAccumulator& a) {
            expansion_span(layout, trajectory, sup, orbit0, orbit1, k, workers, a);
        });
    }

    ProjectionResult result;
    result.trajectory = trajectory;
    result.frame = frame;
    result.num_data = layout.num_data;
    result.half = layout.half();
    result.logical = {AmplitudePoly(layout.num_data), AmplitudePoly(layout.num_data)};
    for (const auto& a : acc) {
        result.logical.a += a.s0;
        result.logical.b += a.s1;
    }
    if (options.engine == Engine::expansion) {
        // every (element, group) pair re-counts its orbit sum once
        result.logical.a.exact_shift_down(result.half);
        result.logical.b.exact_shift_down(result.half);
    }
    return result;
}

double trajectory_probability(const ProjectionResult& result, const InjectionState& chi) {
    double n2 = std::norm(result.logical.a.evaluate(chi)) + std::norm(result.logical.b.evaluate(chi));
    return std::ldexp(n2, -result.half);
}

}  // namespace ti
