#include "sxq/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace sxq {

namespace {
const std::vector<std::string> kA = {"A"};
const std::vector<std::string> kCA = {"C_A"};
const std::vector<std::string> kB = {"B"};
const std::vector<std::string> kCB = {"C_B"};
}  // namespace

double RateLedger::net() const {
    double s = 0.0;
    for (const auto& step : steps) s += step.log_e_in - step.log_e_out;
    return s;
}

std::pair<double, double> upper_bounds(const LabeledPureState& s) {
    const double u1 = cond_entropy(s, kCB, kA) + cond_entropy(s, kCA, {"B", "C_B"});
    const double u2 = cond_entropy(s, kCA, kB) + cond_entropy(s, kCB, {"A", "C_A"});
    return {u1, u2};
}

std::pair<double, double> lower_bounds(const LabeledPureState& s) {
    const double l1 = entropy_of(s, {"A", "C_B"}) - entropy_of(s, {"A", "C_A"});
    const double l2 = entropy_of(s, {"B", "C_A"}) - entropy_of(s, {"B", "C_B"});
    return {l1, l2};
}

std::pair<double, double> weak_lower_bounds(const LabeledPureState& s) {
    const double l3 =
        -cond_entropy(s, {"A", "C_B"}, {"B", "C_A"}) - entropy_of(s, {"A", "C_A"});
    const double l4 =
        -cond_entropy(s, {"B", "C_A"}, {"A", "C_B"}) - entropy_of(s, {"B", "C_B"});
    return {l3, l4};
}

std::pair<double, double> fully_quantum_rates(const LabeledPureState& s) {
    const auto [l1, l2] = lower_bounds(s);
    const auto [u1, u2] = upper_bounds(s);
    (void)u2;
    const double er = 0.5 * (l1 + l2);
    const double qr =
        0.5 * u1 + 0.5 * (cond_entropy(s, kCA, kA) + cond_entropy(s, kCB, {"B", "C_A"}));
    return {er, qr};
}

RateLedger merge_and_merge_ledger(const LabeledPureState& s, MergeOrder order) {
    double first, second;
    if (order == MergeOrder::A_first) {
        first = cond_entropy(s, kCA, {"B", "C_B"});  // merge C_A to Bob
        second = cond_entropy(s, kCB, kA);           // then C_B to Alice
    } else {
        first = cond_entropy(s, kCB, {"A", "C_A"});
        second = cond_entropy(s, kCA, kB);
    }
    RateLedger ledger;
    for (double rate : {first, second})
        ledger.steps.push_back({std::max(rate, 0.0), std::max(-rate, 0.0)});
    return ledger;
}

std::pair<double, double> ghz_gap_check(const LabeledPureState& phi, int d) {
    if (d < 2) throw std::invalid_argument("ghz_gap_check: d must be >= 2");
    phi.validate();

    LabeledPureState ghz;
    std::string base = "ghz";
    while (phi.layout.factor_index(base + "1") >= 0 || phi.layout.factor_index(base + "2") >= 0 ||
           phi.layout.factor_index(base + "3") >= 0)
        base += "_";
    ghz.layout.factors = {{base + "1", d}, {base + "2", d}, {base + "3", d}};
    ghz.layout.role_labels(Role::CA) = {base + "1"};
    ghz.layout.role_labels(Role::CB) = {base + "2"};
    ghz.layout.role_labels(Role::R) = {base + "3"};
    ghz.amps = build_ghz(d);

    const LabeledPureState psi = tensor(phi, ghz);
    const auto [pu1, pu2] = upper_bounds(phi);
    const auto [su1, su2] = upper_bounds(psi);
    return {std::min(pu1, pu2), std::min(su1, su2) - std::log2(static_cast<double>(d))};
}

BoundReport compute_bounds(const LabeledPureState& s, const std::string& state_id) {
    BoundReport r;
    r.state_id = state_id;
    std::tie(r.u1, r.u2) = upper_bounds(s);
    std::tie(r.l1, r.l2) = lower_bounds(s);
    std::tie(r.l3, r.l4) = weak_lower_bounds(s);
    // Ties break toward u1/l1.
    r.u_min = std::min(r.u1, r.u2);
    r.u_min_label = r.u1 <= r.u2 ? "u1" : "u2";
    r.l_best = r.l1;
    r.l_best_label = "l1";
    const std::pair<double, const char*> cands[] = {{r.l2, "l2"}, {r.l3, "l3"}, {r.l4, "l4"}};
    for (const auto& [v, name] : cands)
        if (v > r.l_best) {
            r.l_best = v;
            r.l_best_label = name;
        }
    return r;
}

}  // namespace sxq
