#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ti/amplitude.hpp"
#include "ti/coset.hpp"
#include "ti/layout.hpp"
#include "ti/projector.hpp"

namespace ti {

struct CatalogEntry {
    Trajectory trajectory;
    LogicalState logical;          // exact coefficient vectors
    Complex alpha_l{0, 0};
    Complex beta_l{0, 0};
    Eigen::Vector3d bloch_vec{0, 0, 0};
    double probability = 0.0;         // raw trajectory probability
    double sector_probability = 0.0;  // renormalised within the enumerated set
    bool zero_probability = false;
};

struct Catalog {
    CodeLayout layout;
    InjectionState chi;
    std::vector<CatalogEntry> entries;  // trajectory-string ascending
};

/// Every trajectory with all-zero X outcomes: 2^((N-1)/2) entries. Full
/// enumeration is held to d <= 4; beyond that use sample_trajectories.
Catalog enumerate_trivial_x(const CodeLayout& layout, const InjectionState& chi, int workers = 1);

/// The complete 2^(N-1) trajectory family; d <= 3.
Catalog enumerate_all(const CodeLayout& layout, const InjectionState& chi, int workers = 1);

/// Uniformly drawn distinct Z-outcome strings in the trivial-X sector
/// (uniform over strings, not over the heralded distribution; each entry
/// carries its true probability for re-weighting). Deterministic under the
/// seed; d <= 6. Asking for at least the whole sector returns the full
/// trivial-X catalog.
Catalog sample_trajectories(const CodeLayout& layout, const InjectionState& chi, int count,
                            uint64_t seed, int workers = 1);

struct DistributionStats {
    int distinct_states = 0;       // Bloch points deduplicated at 1e-9
    double min_separation = 0.0;   // angular, over distinct points
    double max_separation = 0.0;
    Eigen::Vector3d mean_bloch{0, 0, 0};  // probability-weighted
};

/// Summary over the positive-probability entries.
DistributionStats distribution_stats(const std::vector<CatalogEntry>& entries);

void write_json(const Catalog& catalog, std::ostream& out);
void write_csv(const Catalog& catalog, std::ostream& out);

}  // namespace ti
