#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ti/amplitude.hpp"
#include "ti/coset.hpp"
#include "ti/layout.hpp"

namespace ti {

enum class Engine { expansion, solver };

/// Signed X-group orbit of a representative: every image string mapped to the
/// sign the X-outcome string assigns it. This is the signed logical codeword
/// of the orbit, shared by the projection engines and the statevector readout.
struct OrbitTable {
    std::unordered_map<BitWord, int, BitWordHash> sign;

    int at(BitWord w) const {
        auto it = sign.find(w);
        return it == sign.end() ? 0 : it->second;
    }
};

/// Expands rep under all 2^((N-1)/2) X-generator subsets; image rep^supp(S)
/// gets sign (-1)^(x_outcomes . S). Guarded to (N-1)/2 <= 20.
OrbitTable orbit_signs(const CodeLayout& layout, BitWord x_outcomes, BitWord rep);

struct ProjectionResult {
    Trajectory trajectory;
    LogicalState logical;  // A over the even-parity orbit, B over the odd one
    Frame frame;
    int num_data = 0;
    int half = 0;
};

struct ProjectOptions {
    Engine engine = Engine::solver;
    int workers = 1;
    std::optional<BitWord> rep0_override;  // must be an even-parity coset element
};

/// Projects the transversally initialised state onto the trajectory's signed
/// X-stabiliser eigenspace and splits the Z-consistent coset into the two
/// logical orbits, accumulating exact amplitude polynomials for each.
/// The expansion engine walks every (coset element, group element) pair; the
/// solver engine resolves each element's group factor by GF(2) elimination.
/// Both produce identical coefficients.
ProjectionResult project(const CodeLayout& layout, const Trajectory& trajectory,
                         const ProjectOptions& options = {});

/// P = 2^-((N-1)/2) (|A(chi)|^2 + |B(chi)|^2).
double trajectory_probability(const ProjectionResult& result, const InjectionState& chi);

}  // namespace ti
