#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ti/amplitude.hpp"
#include "ti/coset.hpp"
#include "ti/layout.hpp"
#include "ti/projector.hpp"

namespace ti::oracle {

/// Dense amplitude vector over 2^N basis states; basis index n carries data
/// qubit i in bit i of n. Capped at N <= 13 data qubits.
using StateVector = Eigen::VectorXcd;

constexpr int max_oracle_qubits = 13;

/// |chi>^N: amplitude of |n> is alpha^(N-H(n)) beta^H(n).
StateVector prepare_product(const InjectionState& chi, int num_qubits);

enum class PauliType { x, z };

struct MeasureResult {
    double probability = 0.0;
    bool zeroed = false;  // outcome had probability 0; state flagged zero
};

/// Applies (I + (-1)^forced O)/2 for O the X or Z tensor on `support`, then
/// renormalises. The outcome probability is returned; probability zero leaves
/// a flagged zero state.
MeasureResult measure_operator(StateVector& sv, BitWord support, PauliType type, int forced);

struct Readout {
    Complex alpha_l;
    Complex beta_l;
    double residual;  // norm outside span{|c0>, |c1>}
};

/// Projects a fully stabilised state onto the signed codewords generated by
/// the frame representatives under the X-outcome signs.
Readout logical_readout(const StateVector& sv, const CodeLayout& layout, const Frame& frame,
                        BitWord x_outcomes);

struct TrajectoryRun {
    Complex alpha_l;
    Complex beta_l;
    double probability;  // product of the forced-outcome probabilities
    double residual;
    bool zeroed;
};

/// End-to-end reference: prepare |chi>^N, force-measure all X stabilisers
/// then all Z stabilisers in layout order, and read out the logical pair in
/// the trajectory's frame.
TrajectoryRun run_trajectory(const CodeLayout& layout, const Trajectory& trajectory,
                             const InjectionState& chi);

}  // namespace ti::oracle
