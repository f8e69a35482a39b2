#include "ti/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "ti/json_io.hpp"

namespace ti {

namespace {

CatalogEntry make_entry(const CodeLayout& layout, const Trajectory& traj,
                        const InjectionState& chi) {
    ProjectionResult res = project(layout, traj, {Engine::solver, 1, std::nullopt});
    CatalogEntry e;
    e.trajectory = traj;
    e.logical = res.logical;
    e.probability = trajectory_probability(res, chi);
    try {
        NormalizedState ns = normalize(res.logical, chi);
        e.alpha_l = ns.alpha_l;
        e.beta_l = ns.beta_l;
        e.bloch_vec = bloch(ns.alpha_l, ns.beta_l);
    } catch (const ZeroProbabilityTrajectory&) {
        e.zero_probability = true;
        e.probability = 0.0;
    }
    return e;
}

Catalog build_catalog(const CodeLayout& layout, const InjectionState& chi,
                      const std::vector<Trajectory>& trajectories, int workers) {
    Catalog cat{layout, chi, std::vector<CatalogEntry>(trajectories.size())};
    workers = std::max(1, workers);
    if (workers == 1) {
        for (size_t i = 0; i < trajectories.size(); ++i)
            cat.entries[i] = make_entry(layout, trajectories[i], chi);
    } else {
        std::atomic<size_t> cursor{0};
        std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
        std::vector<std::thread> pool;
        for (int k = 0; k < workers; ++k)
            pool.emplace_back([&, k] {
                try {
                    for (size_t i = cursor.fetch_add(1); i < trajectories.size();
                         i = cursor.fetch_add(1))
                        cat.entries[i] = make_entry(layout, trajectories[i], chi);
                } catch (...) {
                    errors[static_cast<size_t>(k)] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    double total = 0.0;
    for (const auto& e : cat.entries) total += e.probability;
    if (total > 0.0)
        for (auto& e : cat.entries) e.sector_probability = e.probability / total;
    return cat;
}

// Z-outcome bits laid out so the printed string ascends with `value`
// (char j = bit (half-1-j) of value).
Bits z_bits_from_value(uint64_t value, int half) {
    BitWord w;
    for (int j = 0; j < half; ++j)
        if ((value >> (half - 1 - j)) & 1) w.set(j);
    return {w, half};
}

}  // namespace

Catalog enumerate_trivial_x(const CodeLayout& layout, const InjectionState& chi, int workers) {
    if (layout.distance > 4)
        throw std::invalid_argument(
            "full trivial-X enumeration is held to d <= 4; use sample_trajectories");
    int half = layout.half();
    std::vector<Trajectory> trajs;
    trajs.reserve(size_t(1) << half);
    for (uint64_t v = 0; v < (uint64_t(1) << half); ++v)
        trajs.push_back({Bits{BitWord{}, half}, z_bits_from_value(v, half)});
    return build_catalog(layout, chi, trajs, workers);
}

Catalog enumerate_all(const CodeLayout& layout, const InjectionState& chi, int workers) {
    if (layout.distance > 3)
        throw std::invalid_argument("full trajectory enumeration is held to d <= 3");
    int half = layout.half();
    int total_bits = 2 * half;
    std::vector<Trajectory> trajs;
    trajs.reserve(size_t(1) << total_bits);
    for (uint64_t v = 0; v < (uint64_t(1) << total_bits); ++v) {
        uint64_t xv = v >> half;
        uint64_t zv = v & ((uint64_t(1) << half) - 1);
        trajs.push_back({z_bits_from_value(xv, half), z_bits_from_value(zv, half)});
    }
    return build_catalog(layout, chi, trajs, workers);
}

Catalog sample_trajectories(const CodeLayout& layout, const InjectionState& chi, int count,
                            uint64_t seed, int workers) {
    if (layout.distance > 6)
        throw std::invalid_argument("sampling is held to d <= 6");
    if (count < 1) throw std::invalid_argument("sample count must be positive");
    int half = layout.half();
    uint64_t sector = uint64_t(1) << half;
    std::vector<uint64_t> values;
    if (static_cast<uint64_t>(count) >= sector) {
        for (uint64_t v = 0; v < sector; ++v) values.push_back(v);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<uint64_t> dist(0, sector - 1);
        std::set<uint64_t> seen;
        while (seen.size() < static_cast<size_t>(count)) seen.insert(dist(rng));
        values.assign(seen.begin(), seen.end());
    }
    std::vector<Trajectory> trajs;
    trajs.reserve(values.size());
    for (uint64_t v : values)
        trajs.push_back({Bits{BitWord{}, half}, z_bits_from_value(v, half)});
    std::sort(trajs.begin(), trajs.end(),
              [](const Trajectory& a, const Trajectory& b) { return lex_less(a.z.word, b.z.word); });
    return build_catalog(layout, chi, trajs, workers);
}

DistributionStats distribution_stats(const std::vector<CatalogEntry>& entries) {
    if (entries.empty()) throw std::invalid_argument("distribution_stats needs entries");
    DistributionStats st;
    std::vector<Eigen::Vector3d> distinct;
    double weight = 0.0;
    Eigen::Vector3d mean{0, 0, 0};
    for (const auto& e : entries) {
        if (e.zero_probability) continue;
        mean += e.probability * e.bloch_vec;
        weight += e.probability;
        bool fresh = true;
        for (const auto& p : distinct)
            if ((p - e.bloch_vec).norm() <= 1e-9) {
                fresh = false;
                break;
            }
        if (fresh) distinct.push_back(e.bloch_vec);
    }
    st.distinct_states = static_cast<int>(distinct.size());
    if (weight > 0.0) st.mean_bloch = mean / weight;
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (size_t i = 0; i < distinct.size(); ++i)
        for (size_t j = i + 1; j < distinct.size(); ++j) {
            double c = std::clamp(distinct[i].dot(distinct[j]), -1.0, 1.0);
            double ang = std::acos(c);
            lo = first ? ang : std::min(lo, ang);
            hi = first ? ang : std::max(hi, ang);
            first = false;
        }
    st.min_separation = lo;
    st.max_separation = hi;
    return st;
}

namespace {

Json entry_json(const CatalogEntry& e) {
    Json j;
    j["trajectory"] = e.trajectory.str();
    j["A_coeffs"] = e.logical.a.coeffs();
    j["B_coeffs"] = e.logical.b.coeffs();
    j["alpha_L"] = complex_json(e.alpha_l);
    j["beta_L"] = complex_json(e.beta_l);
    j["bloch"] = Json::array({e.bloch_vec.x(), e.bloch_vec.y(), e.bloch_vec.z()});
    j["probability"] = e.probability;
    j["sector_probability"] = e.sector_probability;
    j["zero_probability"] = e.zero_probability;
    return j;
}

void append_double(std::string& line, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    line.append(buf, ptr);
}

}  // namespace

void write_json(const Catalog& cat, std::ostream& out) {
    Json j;
    j["layout"] = layout_json(cat.layout);
    j["chi"] = Json{{"theta", cat.chi.theta()}, {"phi", cat.chi.phi()}};
    Json entries = Json::array();
    for (const auto& e : cat.entries) entries.push_back(entry_json(e));
    j["entries"] = std::move(entries);
    out << j.dump(2) << '\n';
}

void write_csv(const Catalog& cat, std::ostream& out) {
    out << "trajectory,prob,alphaL_re,alphaL_im,betaL_re,betaL_im,bloch_x,bloch_y,bloch_z\n";
    for (const auto& e : cat.entries) {
        std::string line = e.trajectory.str();
        const double cols[] = {e.probability,      e.alpha_l.real(),  e.alpha_l.imag(),
                               e.beta_l.real(),    e.beta_l.imag(),   e.bloch_vec.x(),
                               e.bloch_vec.y(),    e.bloch_vec.z()};
        for (double v : cols) {
            line.push_back(',');
            append_double(line, v);
        }
        line.push_back('\n');
        out << line;
    }
}

}  // namespace ti
