#include "ti/gf2.hpp"

#include <algorithm>

namespace ti {

Gf2Solver::Gf2Solver(std::vector<BitWord> generators) : generators_(std::move(generators)) {
    for (size_t g = 0; g < generators_.size(); ++g) {
        BitWord row = generators_[g];
        BitWord combo;
        combo.set(static_cast<int>(g));
        for (const auto& er : rows_) {
            if (row.test(er.pivot)) {
                row ^= er.row;
                combo ^= er.combo;
            }
        }
        if (!row.any()) continue;  // dependent generator
        rows_.push_back({lowest_bit(row), row, combo});
        std::sort(rows_.begin(), rows_.end(),
                  [](const EchelonRow& a, const EchelonRow& b) { return a.pivot < b.pivot; });
    }
}

std::optional<BitWord> Gf2Solver::solve(BitWord target) const {
    BitWord combo;
    for (const auto& er : rows_) {
        if (target.test(er.pivot)) {
            target ^= er.row;
            combo ^= er.combo;
        }
    }
    if (target.any()) return std::nullopt;
    return combo;
}

BitWord Gf2Solver::combine(BitWord subset) const {
    BitWord acc;
    for (size_t g = 0; g < generators_.size(); ++g)
        if (subset.test(static_cast<int>(g))) acc ^= generators_[g];
    return acc;
}

namespace {

struct AugRow {
    BitWord row;
    int rhs;
};

// Echelon form with pivots at the lowest (leftmost) set bit, full reduction.
// Returns false on inconsistency (a zero row with rhs 1).
bool reduce(std::vector<AugRow>& rows) {
    std::vector<AugRow> done;
    for (AugRow r : rows) {
        for (const auto& d : done) {
            if (r.row.test(lowest_bit(d.row))) {
                r.row ^= d.row;
                r.rhs ^= d.rhs;
            }
        }
        if (!r.row.any()) {
            if (r.rhs) return false;
            continue;
        }
        int p = lowest_bit(r.row);
        for (auto& d : done) {
            if (d.row.test(p)) {
                d.row ^= r.row;
                d.rhs ^= r.rhs;
            }
        }
        done.push_back(r);
    }
    std::sort(done.begin(), done.end(),
              [](const AugRow& a, const AugRow& b) { return lowest_bit(a.row) < lowest_bit(b.row); });
    rows = std::move(done);
    return true;
}

}  // namespace

std::optional<BitWord> lex_min_solution(const std::vector<BitWord>& rows, BitWord rhs, int num_bits) {
    std::vector<AugRow> sys;
    sys.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        sys.push_back({rows[i], rhs.test(static_cast<int>(i)) ? 1 : 0});
    if (!reduce(sys)) return std::nullopt;

    // Particular solution with every free variable at zero.
    BitWord part;
    std::vector<bool> is_pivot(static_cast<size_t>(num_bits), false);
    for (const auto& r : sys) {
        is_pivot[static_cast<size_t>(lowest_bit(r.row))] = true;
        if (r.rhs) part.set(lowest_bit(r.row));
    }

    // Nullspace basis: one vector per free column, then its own reduced
    // echelon form so each basis vector owns a unique leading bit.
    std::vector<BitWord> basis;
    for (int f = 0; f < num_bits; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        BitWord v;
        v.set(f);
        for (const auto& r : sys)
            if (r.row.test(f)) v.set(lowest_bit(r.row));
        basis.push_back(v);
    }
    std::vector<BitWord> rref;
    for (BitWord v : basis) {
        for (const auto& d : rref)
            if (v.test(lowest_bit(d))) v ^= d;
        if (!v.any()) continue;
        for (auto& d : rref)
            if (d.test(lowest_bit(v))) d ^= v;
        rref.push_back(v);
    }

    // Clearing every leading bit the nullspace can reach yields the lex
    // minimum of the affine solution set.
    for (const auto& v : rref)
        if (part.test(lowest_bit(v))) part ^= v;
    return part;
}

int gf2_rank(const std::vector<BitWord>& rows) {
    std::vector<BitWord> ech;
    for (BitWord r : rows) {
        for (const auto& d : ech)
            if (r.test(lowest_bit(d))) r ^= d;
        if (r.any()) ech.push_back(r);
    }
    return static_cast<int>(ech.size());
}

}  // namespace ti
