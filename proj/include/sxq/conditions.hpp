#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sxq/bounds.hpp"

namespace sxq {

// The four QCMI exact-cost markers, in certificate priority order, plus the
// referee-free case.
enum class Certificate { Cor3i_1, Cor3i_2, Cor3i_3, Cor3i_4, Cor3iii };

const std::string& certificate_name(Certificate c);

struct ConditionReport {
    // Keys in fixed order: (R;C_A|A), (R;C_A|B), (R;C_B|A), (R;C_B|B).
    static const std::array<std::string, 4>& qcmi_keys();
    std::array<double, 4> qcmi_raw{};   // as computed (may be tiny negative)
    std::array<double, 4> qcmi{};       // clamped to >= 0
    std::array<bool, 4> holds{};        // qcmi_raw <= tol
    bool r_trivial = false;
    std::optional<double> exact_cost;
    std::optional<Certificate> certificate;
    std::vector<std::string> consistency;  // verified equalities, e.g. "u1 = l1"
};

// Evaluates the four QCMI conditions at `tol`, verifies each held condition's
// paired bound equality within `eq_tol`, and certifies the exact cost.
// Conflicting certificates beyond eq_tol raise NumericalError.
ConditionReport check_conditions(const LabeledPureState& s, double tol = 1e-9,
                                 double eq_tol = 1e-6);

struct AppendixCReport {
    // variants x conditions; variant i is the role relabeling that makes
    // condition i the unique vanishing one.
    std::array<std::array<double, 4>, 4> qcmi{};
    bool ok = false;
    std::vector<std::string> failures;
};

// Builds (1/sqrt(3))(|00000> + |01100> + |10011>) and its three role
// relabelings; asserts each satisfies exactly one QCMI condition.
AppendixCReport appendixc_noninclusion_suite();

// The appendix-c.sx base state on qubit roles A, C_A, B, C_B, R.
LabeledPureState appendixc_state();

}  // namespace sxq
