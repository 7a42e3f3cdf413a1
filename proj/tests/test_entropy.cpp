#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "sxq/conditions.hpp"
#include "sxq/entropy.hpp"
#include "sxq/parse.hpp"
#include "sxq/state.hpp"

using sxq::entropy_of;
using sxq::LabeledPureState;

namespace {

LabeledPureState bell_on_roles() {
    return sxq::parse_state(
        "systems x:2 y:2\nroles A=- C_A=x B=- C_B=y R=-\n"
        "ket (1/sqrt(2)) |0,0>\nket (1/sqrt(2)) |1,1>\n");
}

}  // namespace

TEST_CASE("bell marginals are maximally mixed") {
    const auto s = bell_on_roles();
    const auto rho = sxq::reduce(s, {"x"});
    CHECK(rho.matrix.n == 2);
    CHECK(std::abs(rho.matrix(0, 0) - 0.5) < 1e-12);
    CHECK(std::abs(rho.matrix(0, 1)) < 1e-12);
    CHECK(entropy_of(s, {"x"}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy_of(s, {"x", "y"}) == doctest::Approx(0.0));
}

TEST_CASE("role names resolve to label sets") {
    const auto s = bell_on_roles();
    CHECK(sxq::resolve_labels(s.layout, {"C_A"}) == std::vector<std::string>{"x"});
    CHECK(entropy_of(s, {"C_A"}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy_of(s, {"A"}) == doctest::Approx(0.0));  // trivial role
    CHECK_THROWS_AS(sxq::resolve_labels(s.layout, {"nope"}), std::invalid_argument);
}

TEST_CASE("reduce_dm composes with reduce") {
    const auto s = sxq::random_state(sxq::five_qubit_layout(), 5);
    const auto big = sxq::reduce(s, {"a", "ca", "b"});
    const auto two_step = sxq::reduce_dm(big, {"a", "b"});
    const auto direct = sxq::reduce(s, {"a", "b"});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(two_step.matrix(i, j) - direct.matrix(i, j)) < 1e-12);
    CHECK_THROWS_AS(sxq::reduce_dm(big, {}), std::invalid_argument);
}

TEST_CASE("known two-qubit marginal spectrum") {
    // (3 +- sqrt(5)) / 6 for the marginal on (ca, b) of the benchmark state
    const auto s = sxq::appendixc_state();
    const auto spec = sxq::hermitian_spectrum(sxq::reduce(s, {"ca", "b"}));
    const double hi = (3.0 + std::sqrt(5.0)) / 6.0;
    const double lo = (3.0 - std::sqrt(5.0)) / 6.0;
    CHECK(spec.eigenvalues[0] == doctest::Approx(hi).epsilon(1e-12));
    CHECK(spec.eigenvalues[1] == doctest::Approx(lo).epsilon(1e-12));
    CHECK(spec.eigenvalues[2] == doctest::Approx(0.0));
    CHECK(entropy_of(s, {"ca", "b"}) == doctest::Approx(0.550048).epsilon(1e-4));
}

TEST_CASE("benchmark state entropies") {
    const auto s = sxq::appendixc_state();
    for (const auto& labels : std::vector<std::vector<std::string>>{
             {"r", "a"}, {"a"}, {"b"}, {"r", "ca", "b"}})
        CHECK(entropy_of(s, labels) == doctest::Approx(0.918296).epsilon(1e-4));
    for (const auto& labels : std::vector<std::vector<std::string>>{
             {"cb", "b"}, {"r", "cb", "b"}, {"r", "b"}})
        CHECK(entropy_of(s, labels) == doctest::Approx(1.58496).epsilon(1e-4));
}

TEST_CASE("benchmark state QCMIs") {
    const auto s = sxq::appendixc_state();
    CHECK(std::abs(sxq::qcmi(s, {"R"}, {"C_A"}, {"A"})) < 1e-9);
    CHECK(sxq::qcmi(s, {"R"}, {"C_A"}, {"B"}) == doctest::Approx(0.298418).epsilon(1e-4));
    CHECK(sxq::qcmi(s, {"R"}, {"C_B"}, {"A"}) == doctest::Approx(0.368248).epsilon(1e-4));
    CHECK(sxq::qcmi(s, {"R"}, {"C_B"}, {"B"}) == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("purity duality and strong subadditivity on random states") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const auto s = sxq::random_state(sxq::five_qubit_layout(), seed);
        CHECK(entropy_of(s, {"a", "ca"}) ==
              doctest::Approx(entropy_of(s, {"b", "cb", "r"})).epsilon(1e-9));
        CHECK(sxq::qcmi(s, {"a"}, {"b"}, {"ca", "cb"}) >= -1e-7);
    }
}

TEST_CASE("conditional entropy identity") {
    const auto s = sxq::random_state(sxq::five_qubit_layout(), 21);
    const double lhs = sxq::cond_entropy(s, {"a"}, {"b", "ca"});
    const double rhs = entropy_of(s, {"a", "b", "ca"}) - entropy_of(s, {"b", "ca"});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK_THROWS_AS(sxq::cond_entropy(s, {"a"}, {"a", "b"}), std::invalid_argument);
}

TEST_CASE("binary entropy") {
    CHECK(sxq::binary_entropy(0.0) == 0.0);
    CHECK(sxq::binary_entropy(1.0) == 0.0);
    CHECK(sxq::binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(sxq::binary_entropy(1.5), std::invalid_argument);
}

TEST_CASE("density matrix validate catches defects") {
    auto rho = sxq::reduce(bell_on_roles(), {"x"});
    CHECK_NOTHROW(rho.validate());
    rho.matrix(0, 0) = 0.7;  // trace 1.2
    CHECK_THROWS(rho.validate());
}
