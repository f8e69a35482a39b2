#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "ti/catalog.hpp"
#include "ti/coset.hpp"
#include "ti/json_io.hpp"
#include "ti/layout.hpp"
#include "ti/oracle.hpp"
#include "ti/projector.hpp"

namespace {

using ti::Json;

int default_workers() {
    const char* env = std::getenv("TI_WORKERS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

struct ChiFlags {
    double theta = 0.0, phi = 0.0;
    double alpha_re = 0.0, alpha_im = 0.0, beta_re = 0.0, beta_im = 0.0;
    bool has_angles = false, has_pair = false;

    void attach(CLI::App* cmd) {
        auto* t = cmd->add_option("--theta", theta, "polar angle of chi, radians");
        auto* p = cmd->add_option("--phi", phi, "azimuthal angle of chi, radians");
        auto* ar = cmd->add_option("--alpha-re", alpha_re);
        auto* ai = cmd->add_option("--alpha-im", alpha_im);
        auto* br = cmd->add_option("--beta-re", beta_re);
        auto* bi = cmd->add_option("--beta-im", beta_im);
        cmd->callback([this, t, p, ar, ai, br, bi] {
            has_angles = t->count() || p->count();
            has_pair = ar->count() || ai->count() || br->count() || bi->count();
        });
    }

    std::optional<ti::InjectionState> resolve() const {
        if (has_angles && has_pair)
            throw CLI::ValidationError("chi", "give either --theta/--phi or the complex pair, not both");
        if (has_angles) return ti::InjectionState::from_angles(theta, phi);
        if (has_pair)
            return ti::InjectionState::from_pair({alpha_re, alpha_im}, {beta_re, beta_im});
        return std::nullopt;
    }
};

int run_layout(int distance, const std::string& out_path) {
    std::ofstream file;
    auto& out = open_output(file, out_path);
    out << ti::layout_json(ti::build_layout(distance)).dump(2) << '\n';
    return 0;
}

int run_coset(int distance, const std::string& z_outcomes, const std::string& out_path) {
    if (distance > 3) throw CLI::ValidationError("--distance", "coset printing is guarded to d <= 3");
    ti::CodeLayout lay = ti::build_layout(distance);
    ti::Bits z = ti::Bits::parse(z_outcomes);
    ti::CosetStream stream = ti::enumerate_coset(lay, z);
    Json strings = Json::array();
    ti::BitWord w;
    while (stream.next(w)) strings.push_back(ti::to_bit_string(w, lay.num_data));
    Json j;
    j["distance"] = distance;
    j["z_outcomes"] = z.str();
    j["coset"] = std::move(strings);
    std::ofstream file;
    open_output(file, out_path) << j.dump(2) << '\n';
    return 0;
}

int run_state(int distance, const std::string& traj_str, const ChiFlags& chi_flags,
              const std::string& engine_name, bool symbolic, bool strict, int workers,
              const std::string& out_path) {
    ti::CodeLayout lay = ti::build_layout(distance);
    ti::Trajectory traj = ti::Trajectory::parse(traj_str, lay);
    auto chi = chi_flags.resolve();
    if (!chi && !symbolic)
        throw CLI::ValidationError("chi", "numeric output needs --theta/--phi or a complex pair "
                                          "(or pass --symbolic)");

    ti::ProjectOptions opt;
    opt.engine = engine_name == "expansion" ? ti::Engine::expansion : ti::Engine::solver;
    opt.workers = workers;
    ti::ProjectionResult res = ti::project(lay, traj, opt);

    Json j;
    j["trajectory"] = traj.str();
    j["A_coeffs"] = res.logical.a.coeffs();
    j["B_coeffs"] = res.logical.b.coeffs();
    if (chi) {
        try {
            ti::NormalizedState ns = ti::normalize(res.logical, *chi);
            j["alpha_L"] = ti::complex_json(ns.alpha_l);
            j["beta_L"] = ti::complex_json(ns.beta_l);
            Eigen::Vector3d b = ti::bloch(ns.alpha_l, ns.beta_l);
            j["bloch"] = Json::array({b.x(), b.y(), b.z()});
        } catch (const ti::ZeroProbabilityTrajectory&) {
            if (strict) throw;
            j["alpha_L"] = nullptr;
            j["beta_L"] = nullptr;
            j["bloch"] = nullptr;
        }
        j["probability"] = ti::trajectory_probability(res, *chi);
    }
    j["frame"] = Json{{"rep0", ti::to_bit_string(res.frame.rep0, lay.num_data)},
                      {"rep1", ti::to_bit_string(res.frame.rep1, lay.num_data)}};
    std::ofstream file;
    open_output(file, out_path) << j.dump(2) << '\n';
    return 0;
}

int run_enumerate(int distance, bool trivial_x, bool all, int sample_count, uint64_t seed,
                  const ChiFlags& chi_flags, const std::string& format, int workers,
                  const std::string& out_path) {
    int modes = (trivial_x ? 1 : 0) + (all ? 1 : 0) + (sample_count > 0 ? 1 : 0);
    if (modes != 1)
        throw CLI::ValidationError("mode", "pick exactly one of --trivial-x, --all, --sample N");
    auto chi = chi_flags.resolve();
    if (!chi) throw CLI::ValidationError("chi", "enumerate needs --theta/--phi");
    ti::CodeLayout lay = ti::build_layout(distance);
    ti::Catalog cat = all ? ti::enumerate_all(lay, *chi, workers)
                     : trivial_x
                         ? ti::enumerate_trivial_x(lay, *chi, workers)
                         : ti::sample_trajectories(lay, *chi, sample_count, seed, workers);
    std::ofstream file;
    auto& out = open_output(file, out_path);
    if (format == "csv")
        ti::write_csv(cat, out);
    else
        ti::write_json(cat, out);
    return 0;
}

struct Selection {
    bool all = false;
    int count = 0;
};

Selection parse_selection(const std::string& s, const char* flag) {
    Selection sc;
    if (s == "all") {
        sc.all = true;
        return sc;
    }
    if (s.rfind("random:", 0) == 0) {
        sc.count = std::atoi(s.c_str() + 7);
        if (sc.count > 0) return sc;
    }
    throw CLI::ValidationError(flag, "expected all or random:<n>");
}

int run_oracle_check(int distance, const std::string& traj_sel, const std::string& chi_sel,
                     uint64_t seed, const std::string& out_path) {
    if (distance != 2 && distance != 3)
        throw CLI::ValidationError("--distance", "oracle check runs at d=2 or d=3");
    Selection trajectories = parse_selection(traj_sel, "--trajectories");
    Selection chis = parse_selection(chi_sel, "--chis");
    if (chis.all) throw CLI::ValidationError("--chis", "expected random:<m>");

    ti::CodeLayout lay = ti::build_layout(distance);
    int half = lay.half();
    std::mt19937_64 rng(seed);

    std::vector<ti::Trajectory> trajs;
    if (trajectories.all) {
        for (uint64_t v = 0; v < (uint64_t(1) << (2 * half)); ++v) {
            ti::BitWord x, z;
            for (int i = 0; i < half; ++i) {
                if ((v >> (2 * half - 1 - i)) & 1) x.set(i);
                if ((v >> (half - 1 - i)) & 1) z.set(i);
            }
            trajs.push_back({{x, half}, {z, half}});
        }
    } else {
        std::uniform_int_distribution<uint64_t> dist(0, (uint64_t(1) << (2 * half)) - 1);
        for (int k = 0; k < trajectories.count; ++k) {
            uint64_t v = dist(rng);
            ti::BitWord x, z;
            for (int i = 0; i < half; ++i) {
                if ((v >> i) & 1) x.set(i);
                if ((v >> (half + i)) & 1) z.set(i);
            }
            trajs.push_back({{x, half}, {z, half}});
        }
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<ti::InjectionState> chi_list;
    for (int m = 0; m < chis.count; ++m) {
        double theta = std::acos(1.0 - 2.0 * unit(rng));
        double phi = 2.0 * std::numbers::pi * unit(rng);
        chi_list.push_back(ti::InjectionState::from_angles(theta, phi));
    }

    const double tol = 1e-9;
    double worst_state = 0.0, worst_prob = 0.0;
    Json rows = Json::array();
    for (const auto& traj : trajs) {
        ti::ProjectionResult res = ti::project(lay, traj, {});
        double max_state = 0.0, max_prob = 0.0;
        for (const auto& chi : chi_list) {
            ti::oracle::TrajectoryRun ref = ti::oracle::run_trajectory(lay, traj, chi);
            double p_alg = ti::trajectory_probability(res, chi);
            max_prob = std::max(max_prob, std::abs(p_alg - ref.probability));
            if (ref.zeroed || p_alg == 0.0) {
                // no state to compare; probabilities must agree at zero
                max_state = std::max(max_state, std::abs(p_alg - ref.probability));
                continue;
            }
            ti::NormalizedState ns = ti::normalize(res.logical, chi);
            ti::Complex overlap =
                std::conj(ns.alpha_l) * ref.alpha_l + std::conj(ns.beta_l) * ref.beta_l;
            max_state = std::max(max_state, std::abs(1.0 - std::abs(overlap)));
            max_state = std::max(max_state, ref.residual);
        }
        worst_state = std::max(worst_state, max_state);
        worst_prob = std::max(worst_prob, max_prob);
        rows.push_back(Json{{"trajectory", traj.str()},
                            {"max_state_deviation", max_state},
                            {"max_probability_deviation", max_prob}});
    }

    bool pass = worst_state <= tol && worst_prob <= tol;
    Json j;
    j["distance"] = distance;
    j["trajectories"] = rows.size();
    j["chis"] = chi_list.size();
    j["per_trajectory"] = std::move(rows);
    j["max_state_deviation"] = worst_state;
    j["max_probability_deviation"] = worst_prob;
    j["tolerance"] = tol;
    j["pass"] = pass;
    std::ofstream file;
    open_output(file, out_path) << j.dump(2) << '\n';
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transversal-injection logical state calculator for unrotated surface codes"};
    app.require_subcommand(1);

    int workers = default_workers();
    app.add_option("--workers", workers,
                   "worker threads for enumeration/projection (default TI_WORKERS or 1)")
        ->capture_default_str();

    std::string out_path;
    app.add_option("--out", out_path, "write results to a file instead of stdout");

    auto* layout_cmd = app.add_subcommand("layout", "print the surface code layout as JSON");
    int layout_d = 0;
    layout_cmd->add_option("--distance", layout_d, "code distance")->required();

    auto* coset_cmd =
        app.add_subcommand("coset", "print the eigenvalue strings consistent with Z outcomes");
    int coset_d = 0;
    std::string coset_z;
    coset_cmd->add_option("--distance", coset_d, "code distance (<= 3)")->required();
    coset_cmd->add_option("--z-outcomes", coset_z, "Z outcome bits, stabiliser order")->required();

    auto* state_cmd =
        app.add_subcommand("state", "compute the logical state of one stabiliser trajectory");
    int state_d = 0;
    std::string state_traj, engine = "solver";
    bool symbolic = false, strict = false;
    ChiFlags state_chi;
    state_cmd->add_option("--distance", state_d, "code distance")->required();
    state_cmd
        ->add_option("--trajectory", state_traj,
                     "N-1 outcome bits: X stabilisers then Z stabilisers, left to right")
        ->required();
    state_cmd->add_option("--engine", engine, "expansion | solver")
        ->check(CLI::IsMember({"expansion", "solver"}));
    state_cmd->add_flag("--symbolic", symbolic, "emit exact coefficients only; chi optional");
    state_cmd->add_flag("--strict", strict, "zero-probability trajectory exits 1");
    state_chi.attach(state_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "tabulate whole trajectory families");
    int enum_d = 0, sample_count = 0;
    uint64_t seed = 0;
    bool trivial_x = false, all_traj = false;
    std::string format = "json";
    ChiFlags enum_chi;
    enum_cmd->add_option("--distance", enum_d, "code distance")->required();
    enum_cmd->add_flag("--trivial-x", trivial_x, "all trajectories with zero X outcomes (d <= 4)");
    enum_cmd->add_flag("--all", all_traj, "the complete trajectory family (d <= 3)");
    enum_cmd->add_option("--sample", sample_count,
                         "sample this many distinct trivial-X trajectories (d <= 6)");
    enum_cmd->add_option("--seed", seed, "sampling seed");
    enum_cmd->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enum_chi.attach(enum_cmd);

    auto* oracle_cmd = app.add_subcommand(
        "oracle-check", "cross-validate the projection against the dense statevector reference");
    int oracle_d = 2;
    std::string oracle_trajs = "all", oracle_chis = "random:20";
    uint64_t oracle_seed = 0;
    oracle_cmd->add_option("--distance", oracle_d, "2 or 3")->required();
    oracle_cmd->add_option("--trajectories", oracle_trajs, "all | random:<n>");
    oracle_cmd->add_option("--chis", oracle_chis, "random:<m>");
    oracle_cmd->add_option("--seed", oracle_seed, "rng seed");

    for (auto* cmd : app.get_subcommands({})) cmd->fallthrough();

    try {
        app.parse(argc, argv);
        if (layout_cmd->parsed()) return run_layout(layout_d, out_path);
        if (coset_cmd->parsed()) return run_coset(coset_d, coset_z, out_path);
        if (state_cmd->parsed())
            return run_state(state_d, state_traj, state_chi, engine, symbolic, strict, workers,
                             out_path);
        if (enum_cmd->parsed())
            return run_enumerate(enum_d, trivial_x, all_traj, sample_count, seed, enum_chi, format,
                                 workers, out_path);
        if (oracle_cmd->parsed())
            return run_oracle_check(oracle_d, oracle_trajs, oracle_chis, oracle_seed, out_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
