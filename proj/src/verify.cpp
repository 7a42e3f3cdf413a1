#include "sxq/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "sxq/builtins.hpp"
#include "sxq/channel.hpp"
#include "sxq/conditions.hpp"
#include "sxq/parse.hpp"
#include "sxq/sweep.hpp"

namespace sxq {

namespace {

struct Checker {
    std::vector<CheckResult> results;
    bool current_ok = true;
    std::ostringstream detail;

    void begin() {
        current_ok = true;
        detail.str("");
    }
    void require(bool ok, const std::string& msg) {
        if (!ok) {
            current_ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << msg;
        }
    }
    void end(const std::string& name, const std::string& ok_detail = "") {
        results.push_back({name, current_ok, current_ok ? ok_detail : detail.str()});
    }
};

std::string num(double v) {
    std::ostringstream s;
    s.precision(9);
    s << v;
    return s.str();
}

void check_appendix_c(Checker& ck, Fault fault) {
    ck.begin();
    const LabeledPureState s = appendixc_state();
    const double scale = fault == Fault::NatLog ? std::log(2.0) : 1.0;
    auto H = [&](std::vector<std::string> names) { return scale * entropy_of(s, names); };

    const double h918 = 0.918296;
    const double h1585 = 1.58496;
    const double h550 = 0.550048;
    struct Entry {
        const char* name;
        std::vector<std::string> set;
        double expect;
    };
    const Entry entries[] = {
        {"H(RA)", {"R", "A"}, h918},        {"H(A)", {"A"}, h918},
        {"H(B)", {"B"}, h918},              {"H(RC_AB)", {"R", "C_A", "B"}, h918},
        {"H(C_BB)", {"C_B", "B"}, h1585},   {"H(RC_BB)", {"R", "C_B", "B"}, h1585},
        {"H(RB)", {"R", "B"}, h1585},       {"H(C_AB)", {"C_A", "B"}, h550},
    };
    for (const auto& e : entries) {
        const double v = H(e.set);
        ck.require(std::abs(v - e.expect) <= 1e-4,
                   std::string(e.name) + " = " + num(v) + ", expected " + num(e.expect));
    }
    const ConditionReport rep = check_conditions(s);
    ck.require(rep.qcmi_raw[0] <= 1e-9, "I(R;C_A|A) = " + num(rep.qcmi_raw[0]) + " > 1e-9");
    for (int i = 1; i < 4; ++i)
        ck.require(rep.qcmi[i] > 0.05, ConditionReport::qcmi_keys()[i] + " = " +
                                           num(rep.qcmi[i]) + ", expected > 0.05");
    int held = 0;
    for (bool h : rep.holds) held += h;
    ck.require(held == 1, "expected exactly one exact-cost condition, got " +
                              std::to_string(held));
    ck.end("appendix-c regression", "8 entropies within 1e-4, one exact-cost condition");
}

void check_fig2_sweep(Checker& ck) {
    ck.begin();
    const SweepResult sw =
        run_sweep(builtin_state_text("eq8.sx"), {}, "lambda", 0.0, 1.0, 0.01, {});
    ck.require(sw.u1_sign_changes == 1,
               "u1 sign changes = " + std::to_string(sw.u1_sign_changes) + ", expected 1");
    ck.require(sw.u1_crossing.has_value(), "no refined u1 crossing");
    if (sw.u1_crossing)
        ck.require(*sw.u1_crossing > 0.60 && *sw.u1_crossing < 0.70,
                   "u1 crossing " + num(*sw.u1_crossing) + " outside (0.60, 0.70)");
    const SweepRow& last = sw.rows.back();
    ck.require(std::abs(last.param_value - 1.0) < 1e-12, "grid does not end at 1");
    ck.require(std::abs(last.u1 + 1.0) <= 1e-7, "u1(1) = " + num(last.u1) + ", expected -1");
    ck.require(std::abs(last.l1 + 1.0) <= 1e-7, "l1(1) = " + num(last.l1) + ", expected -1");
    std::string ok = sw.u1_crossing ? "u1 crosses zero once at lambda = " + num(*sw.u1_crossing)
                                    : "";
    ck.end("fig-2 lambda sweep", ok);
}

void check_ghz_gap(Checker& ck, Fault fault) {
    ck.begin();
    std::mt19937_64 rng(20240817);
    const SubsystemLayout layout = five_qubit_layout();
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const LabeledPureState phi = random_state(layout, rng);
        for (int d : {2, 3}) {
            double lhs, rhs;
            if (fault == Fault::RoleOrder) {
                // Tampered construction: the GHZ legs land on C_A, B, R
                // instead of C_A, C_B, R.
                LabeledPureState ghz;
                ghz.layout.factors = {{"g1", d}, {"g2", d}, {"g3", d}};
                ghz.layout.role_labels(Role::CA) = {"g1"};
                ghz.layout.role_labels(Role::B) = {"g2"};
                ghz.layout.role_labels(Role::R) = {"g3"};
                ghz.amps = build_ghz(d);
                const LabeledPureState psi = tensor(phi, ghz);
                const auto [pu1, pu2] = upper_bounds(phi);
                const auto [su1, su2] = upper_bounds(psi);
                lhs = std::min(pu1, pu2);
                rhs = std::min(su1, su2) - std::log2(static_cast<double>(d));
            } else {
                std::tie(lhs, rhs) = ghz_gap_check(phi, d);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    ck.require(worst <= 1e-7, "max |lhs - rhs| = " + num(worst));
    ck.end("ghz gap identity", "max deviation " + num(worst) + " over 50 states, d in {2,3}");
}

void check_converse_gap(Checker& ck) {
    ck.begin();
    const LabeledPureState s = parse_state(builtin_state_text("eq5.sx"));
    const auto [l1, l2] = lower_bounds(s);
    ck.require(std::abs(l1) <= 1e-9, "l1 = " + num(l1) + ", expected 0");
    ck.require(std::abs(l2) <= 1e-9, "l2 = " + num(l2) + ", expected 0");
    const double split_val = converse_value(s, ChannelSpec::split({"ra", "rca"}));
    ck.require(std::abs(split_val - 2.0) <= 1e-9,
               "split{ra,rca} value = " + num(split_val) + ", expected 2");
    OptimizeConfig cfg;
    cfg.dim_v = 4;
    cfg.dim_e = 4;
    cfg.restarts = 8;
    cfg.seed = 7;
    cfg.max_iters = 40;
    const ConverseResult cr = optimize_converse(s, cfg);
    ck.require(cr.continuous_ran && cr.best_continuous >= 1.95,
               "continuous optimizer reached " + num(cr.best_continuous) + ", expected >= 1.95");
    ck.end("eq-5 converse gap",
           "split value 2, continuous search reached " + num(cr.best_continuous));
}

void check_property_suite(Checker& ck) {
    ck.begin();
    std::mt19937_64 rng(987654321);
    const SubsystemLayout layout = five_qubit_layout();
    for (int trial = 0; trial < 200 && ck.current_ok; ++trial) {
        const LabeledPureState s = random_state(layout, rng);
        const auto [u1, u2] = upper_bounds(s);
        const auto [l1, l2] = lower_bounds(s);
        const auto [l3, l4] = weak_lower_bounds(s);
        ck.require(std::min(u1, u2) >= std::max(l1, l2) - 1e-7,
                   "sandwich violated: min u " + num(std::min(u1, u2)) + " < max l " +
                       num(std::max(l1, l2)));
        ck.require(l3 <= l1 + 1e-7, "l3 " + num(l3) + " > l1 " + num(l1));
        ck.require(l4 <= l2 + 1e-7, "l4 " + num(l4) + " > l2 " + num(l2));
        const auto [x1, x2] = lower_bounds(exchanged_state(s));
        ck.require(std::abs(x1 + l1) <= 1e-9, "l1(exchanged) != -l1");
        ck.require(std::abs(x2 + l2) <= 1e-9, "l2(exchanged) != -l2");
        for (const auto& [y, z] : {std::pair{"C_A", "A"}, {"C_A", "B"}, {"C_B", "A"},
                                   {"C_B", "B"}})
            ck.require(qcmi(s, {"R"}, {y}, {z}) >= -1e-7, "strong subadditivity violated");
        // Pure tripartition a | ca,b | cb,r.
        const double hxy = cond_entropy(s, {"a"}, {"ca", "b"});
        const double hxz = cond_entropy(s, {"a"}, {"cb", "r"});
        ck.require(std::abs(hxy + hxz) <= 1e-7, "conditional-entropy duality violated");
    }
    ck.end("random-state property suite", "200 five-qubit states");
}

void check_trivial_splits(Checker& ck) {
    ck.begin();
    std::mt19937_64 rng(13572468);
    SubsystemLayout two_r = five_qubit_layout();
    two_r.factors.push_back({"r2", 2});
    two_r.role_labels(Role::R).push_back("r2");
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const SubsystemLayout& layout = trial % 2 ? two_r : five_qubit_layout();
        const LabeledPureState s = random_state(layout, rng);
        const auto [l1, l2] = lower_bounds(s);
        const double v_none = converse_value(s, ChannelSpec::split({}));
        const double v_all = converse_value(s, ChannelSpec::split(s.layout.role_labels(Role::R)));
        worst = std::max({worst, std::abs(v_none - l1), std::abs(v_all - l2)});
    }
    ck.require(worst <= 1e-9, "max deviation " + num(worst));
    ck.end("trivial-split consistency", "100 random states, max deviation " + num(worst));
}

}  // namespace

std::vector<CheckResult> run_paper_checks(Fault fault) {
    Checker ck;
    check_appendix_c(ck, fault);
    check_fig2_sweep(ck);
    check_ghz_gap(ck, fault);
    check_converse_gap(ck);
    check_property_suite(ck);
    check_trivial_splits(ck);
    return ck.results;
}

}  // namespace sxq
