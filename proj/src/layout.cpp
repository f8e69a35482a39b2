#include "ti/layout.hpp"

#include <algorithm>
#include <stdexcept>

#include "ti/gf2.hpp"

namespace ti {

namespace {

bool is_data_cell(int r, int c) { return ((r + c) & 1) == 0; }

// Row-major data-qubit index for a data cell, -1 for ancilla cells.
std::vector<std::vector<int>> data_index_grid(int d) {
    int side = 2 * d - 1;
    std::vector<std::vector<int>> idx(static_cast<size_t>(side),
                                      std::vector<int>(static_cast<size_t>(side), -1));
    int next = 0;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            if (is_data_cell(r, c)) idx[static_cast<size_t>(r)][static_cast<size_t>(c)] = next++;
    return idx;
}

BitWord neighbour_support(const std::vector<std::vector<int>>& idx, int r, int c) {
    int side = static_cast<int>(idx.size());
    BitWord w;
    const int dr[4] = {-1, 1, 0, 0};
    const int dc[4] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
        int rr = r + dr[k], cc = c + dc[k];
        if (rr < 0 || rr >= side || cc < 0 || cc >= side) continue;
        int q = idx[static_cast<size_t>(rr)][static_cast<size_t>(cc)];
        if (q >= 0) w.set(q);
    }
    return w;
}

}  // namespace

CodeLayout build_layout(int distance) {
    if (distance < 2)
        throw std::invalid_argument("distance must be at least 2 (the d=1 code has no stabilisers)");
    if (distance > 8)
        throw std::invalid_argument("distance above 8 exceeds the 128-bit qubit index space");
    CodeLayout lay;
    lay.distance = distance;
    lay.num_data = distance * distance + (distance - 1) * (distance - 1);

    int side = 2 * distance - 1;
    auto idx = data_index_grid(distance);

    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            if (is_data_cell(r, c)) continue;
            BitWord sup = neighbour_support(idx, r, c);
            if (r % 2 == 1)
                lay.z_stabs.push_back(sup);  // odd row, even col: plaquette
            else
                lay.x_stabs.push_back(sup);  // even row, odd col: vertex
        }
    }

    for (int c = 0; c < side; c += 2) lay.logical_z.set(idx[0][static_cast<size_t>(c)]);
    for (int r = 0; r < side; r += 2) lay.logical_x.set(idx[static_cast<size_t>(r)][0]);

    lay.z_aux_index.reserve(lay.z_stabs.size());
    for (const BitWord& z : lay.z_stabs) lay.z_aux_index.push_back(to_indices(z, lay.num_data));
    return lay;
}

namespace {

// Data qubits are adjacent when they share a stabiliser support; the logical
// Z chain must connect the left grid boundary to the right one.
bool chain_connects_left_right(const CodeLayout& lay) {
    if (lay.distance < 2 || lay.distance > 8) return false;
    auto idx = data_index_grid(lay.distance);
    int side = 2 * lay.distance - 1;
    // sized from the grid, not from the (possibly inconsistent) num_data field
    int grid_data = lay.distance * lay.distance + (lay.distance - 1) * (lay.distance - 1);
    std::vector<int> col_of(static_cast<size_t>(grid_data), -1);
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c)
            if (idx[static_cast<size_t>(r)][static_cast<size_t>(c)] >= 0)
                col_of[static_cast<size_t>(idx[static_cast<size_t>(r)][static_cast<size_t>(c)])] = c;

    std::vector<int> chain = to_indices(lay.logical_z, grid_data);
    if (chain.empty()) return false;

    auto adjacent = [&](int a, int b) {
        for (const BitWord& s : lay.z_stabs)
            if (s.test(a) && s.test(b)) return true;
        for (const BitWord& s : lay.x_stabs)
            if (s.test(a) && s.test(b)) return true;
        return false;
    };

    // flood fill over the chain qubits
    std::vector<int> stack{chain[0]};
    std::vector<bool> seen(static_cast<size_t>(grid_data), false);
    seen[static_cast<size_t>(chain[0])] = true;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int p : chain) {
            if (!seen[static_cast<size_t>(p)] && adjacent(q, p)) {
                seen[static_cast<size_t>(p)] = true;
                stack.push_back(p);
            }
        }
    }
    bool touches_left = false, touches_right = false;
    for (int q : chain) {
        if (!seen[static_cast<size_t>(q)]) return false;
        if (col_of[static_cast<size_t>(q)] == 0) touches_left = true;
        if (col_of[static_cast<size_t>(q)] == side - 1) touches_right = true;
    }
    return touches_left && touches_right;
}

}  // namespace

LayoutReport validate_layout(const CodeLayout& lay) {
    LayoutReport rep;
    auto fail = [&](std::string msg) {
        rep.pass = false;
        rep.violations.push_back(std::move(msg));
    };

    int d = lay.distance;
    int n = d * d + (d - 1) * (d - 1);
    if (lay.num_data != n) fail("num_data != d^2 + (d-1)^2");
    int half = (lay.num_data - 1) / 2;
    if (static_cast<int>(lay.x_stabs.size()) != half) fail("x stabiliser count != (N-1)/2");
    if (static_cast<int>(lay.z_stabs.size()) != half) fail("z stabiliser count != (N-1)/2");

    for (const BitWord& s : lay.x_stabs)
        if (hamming(s) != 3 && hamming(s) != 4) fail("x support popcount not 3 or 4");
    for (const BitWord& s : lay.z_stabs)
        if (hamming(s) != 3 && hamming(s) != 4) fail("z support popcount not 3 or 4");

    int odd_pairs = 0;
    for (const BitWord& x : lay.x_stabs)
        for (const BitWord& z : lay.z_stabs)
            if (masked_parity(x, z) != 0) ++odd_pairs;
    if (odd_pairs > 0)
        fail("x/z stabiliser pairs with odd overlap: " + std::to_string(odd_pairs));

    for (const BitWord& x : lay.x_stabs)
        if (masked_parity(lay.logical_z, x) != 0) fail("logical_z anticommutes with an x stabiliser");
    for (const BitWord& z : lay.z_stabs)
        if (masked_parity(lay.logical_x, z) != 0) fail("logical_x anticommutes with a z stabiliser");
    if (masked_parity(lay.logical_z, lay.logical_x) != 1)
        fail("logical_z and logical_x overlap is even");

    if (hamming(lay.logical_z) != d) fail("logical_z popcount != d");
    if (!chain_connects_left_right(lay)) fail("logical_z is not a connected left-right chain");

    if (lay.z_aux_index.size() != lay.z_stabs.size()) {
        fail("z_aux_index row count mismatch");
    } else {
        for (size_t i = 0; i < lay.z_stabs.size(); ++i)
            if (lay.z_aux_index[i] != to_indices(lay.z_stabs[i], lay.num_data))
                fail("z_aux_index row does not list the set bits of its support");
    }

    std::vector<BitWord> check = lay.z_stabs;
    check.push_back(lay.logical_z);
    if (gf2_rank(check) != half + 1) fail("[z_stabs; logical_z] rank != (N-1)/2 + 1");

    return rep;
}

}  // namespace ti
