#pragma once

#include <string>
#include <vector>

#include "ti/bitword.hpp"

namespace ti {

/// The distance-d unrotated surface code. Data qubits live on the cells of a
/// (2d-1)x(2d-1) grid with even row+col, numbered row-major from 0. Vertex
/// (X-type) ancillas sit at even row / odd col, plaquette (Z-type) ancillas at
/// odd row / even col; each couples to its grid neighbours. Stabilisers are
/// ordered row-major by ancilla position.
struct CodeLayout {
    int distance = 0;
    int num_data = 0;                        // d^2 + (d-1)^2
    std::vector<BitWord> x_stabs;            // (N-1)/2 vertex supports
    std::vector<BitWord> z_stabs;            // (N-1)/2 plaquette supports
    BitWord logical_z;                       // the d data qubits of row 0
    BitWord logical_x;                       // the d data qubits of column 0
    std::vector<std::vector<int>> z_aux_index;  // ascending set bits of each z_stab

    int half() const { return (num_data - 1) / 2; }
};

/// Builds the layout for distance d >= 2. Deterministic; bit-identical
/// across runs and platforms.
CodeLayout build_layout(int distance);

struct LayoutReport {
    bool pass = true;
    std::vector<std::string> violations;
};

/// Checks every CodeLayout invariant without mutating anything. Violations
/// are collected, not thrown.
LayoutReport validate_layout(const CodeLayout& layout);

}  // namespace ti
