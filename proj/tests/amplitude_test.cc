#include "ti/amplitude.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ti/json_io.hpp"
#include "test_util.hh"

using namespace ti;

namespace {

// reference fixture: alpha^4 beta + alpha^3 beta^2 - alpha^2 beta^3 - alpha beta^4
AmplitudePoly fixture_a() {
    AmplitudePoly p(5);
    p.add_term(1, 1);
    p.add_term(2, 1);
    p.add_term(3, -1);
    p.add_term(4, -1);
    return p;
}

}  // namespace

TEST(AmplitudePoly, AddTermAndCancel) {
    AmplitudePoly p(5);
    p.add_term(1, 1);
    EXPECT_EQ(p.coeffs(), (std::vector<int64_t>{0, 1, 0, 0, 0, 0}));
    p.add_term(1, -1);
    EXPECT_TRUE(p.is_zero());
    EXPECT_THROW(p.add_term(6, 1), std::out_of_range);
}

TEST(AmplitudePoly, FixtureCoefficients) {
    EXPECT_EQ(fixture_a().coeffs(), (std::vector<int64_t>{0, 1, 1, -1, -1, 0}));
}

TEST(AmplitudePoly, EvaluateFixtures) {
    InjectionState zero;  // |0>
    EXPECT_EQ(fixture_a().evaluate(zero), Complex(0, 0));

    AmplitudePoly top(5);
    top.add_term(0, 1);
    EXPECT_EQ(top.evaluate(zero), Complex(1, 0));

    InjectionState plus = InjectionState::from_pair({1, 0}, {1, 0});
    EXPECT_NEAR(std::abs(fixture_a().evaluate(plus)), 0.0, 1e-15);
}

TEST(AmplitudePoly, EvaluateIsLinear) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int64_t> coeff(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        AmplitudePoly p(7), q(7), sum(7);
        for (int w = 0; w <= 7; ++w) {
            int64_t cp = coeff(rng), cq = coeff(rng);
            for (int64_t k = 0; k < std::abs(cp); ++k) p.add_term(w, cp > 0 ? 1 : -1);
            for (int64_t k = 0; k < std::abs(cq); ++k) q.add_term(w, cq > 0 ? 1 : -1);
        }
        sum += p;
        sum += q;
        InjectionState chi = tu::random_chi(rng);
        Complex lhs = sum.evaluate(chi);
        Complex rhs = p.evaluate(chi) + q.evaluate(chi);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
    }
}

TEST(AmplitudePoly, JsonShape) {
    Json j = poly_json(fixture_a());
    EXPECT_EQ(j["N"], 5);
    EXPECT_EQ(j["coeffs"], Json({0, 1, 1, -1, -1, 0}));
}

TEST(AmplitudePoly, OverflowIsDetected) {
    AmplitudePoly p(2);
    p.add_term(0, 1);
    EXPECT_THROW(
        {
            for (int i = 0; i < 64; ++i) p += p;  // doubles until it must overflow
        },
        std::overflow_error);
}

TEST(InjectionState, ConstructionIsUnit) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        InjectionState chi = tu::random_chi(rng);
        EXPECT_NEAR(std::norm(chi.alpha) + std::norm(chi.beta), 1.0, 1e-12);
    }
    InjectionState scaled = InjectionState::from_pair({3, 0}, {0, 4});
    EXPECT_NEAR(std::norm(scaled.alpha) + std::norm(scaled.beta), 1.0, 1e-12);
    EXPECT_THROW(InjectionState::from_pair({0, 0}, {0, 0}), std::invalid_argument);
}

TEST(Normalize, BasisAndZeroCases) {
    LogicalState s{AmplitudePoly(5), AmplitudePoly(5)};
    s.a.add_term(0, 1);  // pure alpha^5
    InjectionState chi = InjectionState::from_angles(0.7, 0.2);
    NormalizedState ns = normalize(s, chi);
    EXPECT_NEAR(std::abs(ns.alpha_l - Complex(1, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(ns.beta_l), 0.0, 1e-12);

    LogicalState beta_only{fixture_a(), AmplitudePoly(5)};
    beta_only.b.add_term(1, -1);
    beta_only.b.add_term(2, 1);
    beta_only.b.add_term(3, 1);
    beta_only.b.add_term(4, -1);
    EXPECT_THROW(normalize(beta_only, InjectionState{}), ZeroProbabilityTrajectory);
}

TEST(Bloch, CardinalDirections) {
    const double s = 1.0 / std::sqrt(2.0);
    EXPECT_TRUE(bloch({1, 0}, {0, 0}).isApprox(Eigen::Vector3d(0, 0, 1), 1e-12));
    EXPECT_TRUE(bloch({s, 0}, {s, 0}).isApprox(Eigen::Vector3d(1, 0, 0), 1e-12));
    EXPECT_TRUE(bloch({s, 0}, {0, s}).isApprox(Eigen::Vector3d(0, 1, 0), 1e-12));
    EXPECT_THROW(bloch({1, 0}, {1, 0}), std::invalid_argument);
}

TEST(Bloch, GlobalPhaseInvariance) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 30; ++trial) {
        InjectionState chi = tu::random_chi(rng);  // any unit pair
        Complex phase = std::polar(1.0, angle(rng));
        Eigen::Vector3d base = bloch(chi.alpha, chi.beta);
        Eigen::Vector3d rotated = bloch(phase * chi.alpha, phase * chi.beta);
        EXPECT_TRUE(rotated.isApprox(base, 1e-9));
        EXPECT_NEAR(base.norm(), 1.0, 1e-9);
    }
}
