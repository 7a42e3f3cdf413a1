#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sxq/state.hpp"

using sxq::LabeledPureState;

TEST_CASE("ghz amplitudes") {
    for (int d : {2, 3, 5}) {
        const auto amps = sxq::build_ghz(d);
        CHECK(static_cast<int>(amps.size()) == d * d * d);
        double norm = 0.0;
        for (const auto& a : amps) norm += std::norm(a);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        // only |kkk> entries are populated
        for (int k = 0; k < d; ++k)
            CHECK(std::abs(amps[(k * d + k) * d + k] - 1.0 / std::sqrt(double(d))) < 1e-12);
    }
    CHECK_THROWS_AS(sxq::build_ghz(1), std::invalid_argument);
}

TEST_CASE("maxent amplitudes") {
    const auto amps = sxq::build_maxent(3);
    CHECK(amps.size() == 9);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(amps[j * 3 + k] - (j == k ? 1.0 / std::sqrt(3.0) : 0.0)) < 1e-12);
    CHECK_THROWS_AS(sxq::build_maxent(0), std::invalid_argument);
}

TEST_CASE("exchanged state swaps the C roles") {
    LabeledPureState s;
    s.layout = sxq::five_qubit_layout();
    s.amps.assign(32, 0.0);
    s.amps[0] = 1.0;
    const LabeledPureState x = sxq::exchanged_state(s);
    CHECK(x.layout.role_labels(sxq::Role::CA) == std::vector<std::string>{"cb"});
    CHECK(x.layout.role_labels(sxq::Role::CB) == std::vector<std::string>{"ca"});
    CHECK(x.layout.role_labels(sxq::Role::A) == std::vector<std::string>{"a"});
    CHECK(x.amps == s.amps);
}

TEST_CASE("random states are normalized and deterministic per seed") {
    const auto s1 = sxq::random_state(sxq::five_qubit_layout(), 123);
    const auto s2 = sxq::random_state(sxq::five_qubit_layout(), 123);
    const auto s3 = sxq::random_state(sxq::five_qubit_layout(), 124);
    CHECK(s1.amps == s2.amps);
    CHECK(s1.amps != s3.amps);
    double norm = 0.0;
    for (const auto& a : s1.amps) norm += std::norm(a);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("validate flags non-normalized amplitudes") {
    LabeledPureState s;
    s.layout = sxq::five_qubit_layout();
    s.amps.assign(32, 0.0);
    s.amps[0] = 2.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}
