#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sxq/entropy.hpp"

namespace sxq {

// All closed-form bounds for one state, in bits.
struct BoundReport {
    double u1 = 0, u2 = 0, l1 = 0, l2 = 0, l3 = 0, l4 = 0;
    double u_min = 0;   // min(u1, u2), ties labeled u1
    double l_best = 0;  // max(l1, l2, l3, l4), ties labeled l1
    std::string u_min_label, l_best_label;
    std::optional<double> exact_cost;  // set by the conditions module only
    std::string exact_certificate;
    std::string state_id;
};

// Entanglement bookkeeping of a multi-step protocol.
struct RateLedger {
    struct Step {
        double log_e_in = 0, log_e_out = 0;
    };
    std::vector<Step> steps;
    double net() const;
};

enum class MergeOrder { A_first, B_first };

// Achievable upper bounds: u1 = H(C_B|A) + H(C_A|BC_B), u2 = H(C_A|B) + H(C_B|AC_A).
std::pair<double, double> upper_bounds(const LabeledPureState& s);

// Computable converse bounds: l1 = H(AC_B) - H(AC_A), l2 = H(BC_A) - H(BC_B).
std::pair<double, double> lower_bounds(const LabeledPureState& s);

// Weaker bounds l3 = -H(AC_B|BC_A) - H(AC_A), l4 = -H(BC_A|AC_B) - H(BC_B).
std::pair<double, double> weak_lower_bounds(const LabeledPureState& s);

// Achievable (ebit, qubit-channel) rates of the fully quantum variant:
// E_r = (l1+l2)/2, Q_r = u1/2 + (H(C_A|A) + H(C_B|BC_A))/2.
std::pair<double, double> fully_quantum_rates(const LabeledPureState& s);

// Two merging steps; net equals u1 (A_first) or u2 (B_first).
RateLedger merge_and_merge_ledger(const LabeledPureState& s, MergeOrder order);

// Builds phi (x) GHZ(d) with the GHZ factors appended to roles C_A, C_B, R and
// returns (min u(phi), min u(psi~) - log2 d); the two must agree.
std::pair<double, double> ghz_gap_check(const LabeledPureState& phi, int d);

// Fills every bound field (exact_cost left empty).
BoundReport compute_bounds(const LabeledPureState& s, const std::string& state_id = "");

}  // namespace sxq
