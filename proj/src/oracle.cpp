#include "ti/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ti::oracle {

StateVector prepare_product(const InjectionState& chi, int num_qubits) {
    if (num_qubits < 1 || num_qubits > max_oracle_qubits)
        throw std::invalid_argument("oracle supports 1..13 data qubits");
    std::vector<Complex> apow(static_cast<size_t>(num_qubits) + 1, Complex(1, 0));
    std::vector<Complex> bpow(static_cast<size_t>(num_qubits) + 1, Complex(1, 0));
    for (int k = 1; k <= num_qubits; ++k) {
        apow[static_cast<size_t>(k)] = apow[static_cast<size_t>(k - 1)] * chi.alpha;
        bpow[static_cast<size_t>(k)] = bpow[static_cast<size_t>(k - 1)] * chi.beta;
    }
    Eigen::Index dim = Eigen::Index(1) << num_qubits;
    StateVector sv(dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        int h = std::popcount(static_cast<uint64_t>(n));
        sv[n] = apow[static_cast<size_t>(num_qubits - h)] * bpow[static_cast<size_t>(h)];
    }
    return sv;
}

MeasureResult measure_operator(StateVector& sv, BitWord support, PauliType type, int forced) {
    uint64_t mask = support.lo;  // N <= 13
    Eigen::Index dim = sv.size();
    if (type == PauliType::z) {
        for (Eigen::Index n = 0; n < dim; ++n)
            if ((std::popcount(static_cast<uint64_t>(n) & mask) & 1) != forced) sv[n] = Complex(0, 0);
    } else {
        double s = forced ? -1.0 : 1.0;
        for (Eigen::Index n = 0; n < dim; ++n) {
            Eigen::Index m = static_cast<Eigen::Index>(static_cast<uint64_t>(n) ^ mask);
            if (m < n) continue;
            Complex an = sv[n], am = sv[m];
            sv[n] = 0.5 * (an + s * am);
            sv[m] = 0.5 * (am + s * an);
        }
    }
    double p = sv.squaredNorm();
    MeasureResult res{p, p == 0.0};
    if (!res.zeroed) sv /= std::sqrt(p);
    return res;
}

Readout logical_readout(const StateVector& sv, const CodeLayout& layout, const Frame& frame,
                        BitWord x_outcomes) {
    OrbitTable orbit0 = orbit_signs(layout, x_outcomes, frame.rep0);
    OrbitTable orbit1 = orbit_signs(layout, x_outcomes, frame.rep1);
    double inv_sqrt = std::sqrt(std::ldexp(1.0, -layout.half()));

    auto overlap = [&](const OrbitTable& orbit) {
        Complex acc(0, 0);
        for (const auto& [word, sign] : orbit.sign) {
            Eigen::Index n = static_cast<Eigen::Index>(word.lo);
            acc += double(sign) * sv[n];
        }
        return acc * inv_sqrt;
    };
    Complex al = overlap(orbit0);
    Complex bl = overlap(orbit1);

    StateVector rem = sv;
    for (const auto& [word, sign] : orbit0.sign)
        rem[static_cast<Eigen::Index>(word.lo)] -= al * double(sign) * inv_sqrt;
    for (const auto& [word, sign] : orbit1.sign)
        rem[static_cast<Eigen::Index>(word.lo)] -= bl * double(sign) * inv_sqrt;
    return {al, bl, rem.norm()};
}

TrajectoryRun run_trajectory(const CodeLayout& layout, const Trajectory& trajectory,
                             const InjectionState& chi) {
    if (trajectory.x.size != layout.half() || trajectory.z.size != layout.half())
        throw std::invalid_argument("trajectory size does not match layout");
    StateVector sv = prepare_product(chi, layout.num_data);
    double prob = 1.0;
    for (size_t i = 0; i < layout.x_stabs.size(); ++i) {
        auto r = measure_operator(sv, layout.x_stabs[i], PauliType::x,
                                  trajectory.x.test(static_cast<int>(i)) ? 1 : 0);
        prob *= r.probability;
        if (r.zeroed) return {Complex(0, 0), Complex(0, 0), 0.0, 0.0, true};
    }
    for (size_t i = 0; i < layout.z_stabs.size(); ++i) {
        auto r = measure_operator(sv, layout.z_stabs[i], PauliType::z,
                                  trajectory.z.test(static_cast<int>(i)) ? 1 : 0);
        prob *= r.probability;
        if (r.zeroed) return {Complex(0, 0), Complex(0, 0), 0.0, 0.0, true};
    }
    Frame frame = coset_representatives(layout, trajectory.z);
    Readout ro = logical_readout(sv, layout, frame, trajectory.x.word);
    return {ro.alpha_l, ro.beta_l, prob, ro.residual, false};
}

}  // namespace ti::oracle
