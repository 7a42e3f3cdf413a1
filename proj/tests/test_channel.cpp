#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "sxq/bounds.hpp"
#include "sxq/builtins.hpp"
#include "sxq/channel.hpp"
#include "sxq/parse.hpp"

using sxq::ChannelSpec;
using sxq::LabeledPureState;

namespace {

LabeledPureState gap_state() { return sxq::parse_state(sxq::builtin_state_text("eq5.sx")); }

ChannelSpec identity_isometry(int dim_r) {
    sxq::cvec w(static_cast<size_t>(dim_r) * dim_r, 0.0);
    for (int k = 0; k < dim_r; ++k) w[k * dim_r + k] = 1.0;
    return ChannelSpec::isometry(dim_r, 1, std::move(w));
}

}  // namespace

TEST_CASE("trivial splits reproduce l1 and l2") {
    // Discarding all of R gives l1; forwarding all of R gives l2 (purity).
    const auto s = sxq::random_state(sxq::five_qubit_layout(), 606);
    const auto [l1, l2] = sxq::lower_bounds(s);
    CHECK(sxq::converse_value(s, ChannelSpec::split({})) == doctest::Approx(l1).epsilon(1e-9));
    CHECK(sxq::converse_value(s, ChannelSpec::split({"r"})) == doctest::Approx(l2).epsilon(1e-9));
}

TEST_CASE("the {ra, rca} split attains the known gap value") {
    CHECK(sxq::converse_value(gap_state(), ChannelSpec::split({"ra", "rca"})) ==
          doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("identity isometry matches the keep-everything split") {
    const auto s = gap_state();
    const int dim_r = 16;
    const double via_split = sxq::converse_value(s, ChannelSpec::split({"ra", "rca", "rb", "rcb"}));
    CHECK(sxq::converse_value(s, identity_isometry(dim_r)) ==
          doctest::Approx(via_split).epsilon(1e-8));
}

TEST_CASE("padding E with an extra dimension changes nothing") {
    const auto s = gap_state();
    const int dim_r = 16;
    sxq::cvec w(static_cast<size_t>(dim_r) * 2 * dim_r, 0.0);
    for (int k = 0; k < dim_r; ++k) w[(k * 2 + 0) * dim_r + k] = 1.0;  // e always 0
    const ChannelSpec c = ChannelSpec::isometry(dim_r, 2, std::move(w));
    CHECK(sxq::converse_value(s, c) ==
          doctest::Approx(sxq::converse_value(s, identity_isometry(dim_r))).epsilon(1e-8));
}

TEST_CASE("non-isometric matrices are rejected") {
    sxq::cvec w(16 * 16, 0.0);
    for (int k = 0; k < 16; ++k) w[k * 16 + k] = 2.0;
    CHECK_THROWS(sxq::apply_channel(gap_state(), ChannelSpec::isometry(16, 1, std::move(w))));
}

TEST_CASE("split enumeration finds the gap") {
    sxq::OptimizeConfig cfg;
    cfg.splits_only = true;
    const auto res = sxq::optimize_converse(gap_state(), cfg);
    CHECK(res.value == doctest::Approx(2.0).epsilon(1e-9));
    // several splits tie at 2.0; {ra,rca} must be among them
    bool found = false;
    for (const auto& c : res.per_candidate)
        if (c.label == "split{ra,rca}") {
            found = true;
            CHECK(c.value == doctest::Approx(2.0).epsilon(1e-9));
        }
    CHECK(found);
    CHECK(res.per_candidate.size() == 16);
    CHECK_FALSE(res.continuous_ran);
}

TEST_CASE("converse results never exceed the upper bounds") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 5; ++rep) {
        const auto s = sxq::random_state(sxq::five_qubit_layout(), rng());
        sxq::OptimizeConfig cfg;
        cfg.splits_only = true;
        const auto res = sxq::optimize_converse(s, cfg);
        const auto b = sxq::compute_bounds(s);
        CHECK(res.value <= b.u_min + 1e-7);
        CHECK(res.value >= b.l1 - 1e-9);  // the empty split is always a candidate
    }
}

TEST_CASE("gradient ascent improves on the trivial channel") {
    sxq::OptimizeConfig cfg;
    cfg.restarts = 2;
    cfg.max_iters = 40;
    cfg.dim_v = 4;
    cfg.dim_e = 4;
    cfg.seed = 7;
    const auto res = sxq::optimize_converse(gap_state(), cfg);
    CHECK(res.continuous_ran);
    CHECK(res.best_continuous > 1.0);
    CHECK(res.value >= res.best_split - 1e-12);
}

TEST_CASE("split certificate validates the certified cost") {
    const auto s = gap_state();
    const auto cert = sxq::certify_cor3ii(s, ChannelSpec::split({"ra", "rca"}), 1e-9);
    const auto [u1, u2] = sxq::upper_bounds(s);
    CHECK(cert.certified_u1);
    CHECK(cert.exact_cost == doctest::Approx(u1).epsilon(1e-9));
    CHECK(std::abs(cert.qcmi_values[0]) < 1e-9);
    CHECK(std::abs(cert.qcmi_values[1]) < 1e-9);
}
