#include "sxq/conditions.hpp"

#include <cmath>
#include <stdexcept>

namespace sxq {

const std::string& certificate_name(Certificate c) {
    static const std::array<std::string, 5> names = {"Cor3i_1", "Cor3i_2", "Cor3i_3", "Cor3i_4",
                                                     "Cor3iii"};
    return names[static_cast<int>(c)];
}

const std::array<std::string, 4>& ConditionReport::qcmi_keys() {
    static const std::array<std::string, 4> keys = {"(R;C_A|A)", "(R;C_A|B)", "(R;C_B|A)",
                                                    "(R;C_B|B)"};
    return keys;
}

ConditionReport check_conditions(const LabeledPureState& s, double tol, double eq_tol) {
    if (tol <= 0) throw std::invalid_argument("check_conditions: tol must be > 0");
    s.validate();

    ConditionReport rep;
    rep.r_trivial = s.layout.role_labels(Role::R).empty();
    const char* ys[4] = {"C_A", "C_A", "C_B", "C_B"};
    const char* zs[4] = {"A", "B", "A", "B"};
    for (int i = 0; i < 4; ++i) {
        rep.qcmi_raw[i] = rep.r_trivial ? 0.0 : qcmi(s, {"R"}, {ys[i]}, {zs[i]});
        if (rep.qcmi_raw[i] < -1e-7)
            throw NumericalError("QCMI " + ConditionReport::qcmi_keys()[i] + " = " +
                                 std::to_string(rep.qcmi_raw[i]) +
                                 " violates strong subadditivity");
        rep.qcmi[i] = std::max(rep.qcmi_raw[i], 0.0);
        rep.holds[i] = rep.qcmi_raw[i] <= tol;
    }

    const auto [u1, u2] = upper_bounds(s);
    const auto [l1, l2] = lower_bounds(s);
    const double us[4] = {u1, u2, u1, u2};
    const double ls[4] = {l1, l1, l2, l2};
    const char* eqs[4] = {"u1 = l1", "u2 = l1", "u1 = l2", "u2 = l2"};

    struct Cand {
        Certificate cert;
        double value;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < 4; ++i) {
        if (!rep.holds[i]) continue;
        if (std::abs(us[i] - ls[i]) > eq_tol)
            throw NumericalError(std::string("certificate inconsistency: ") +
                                 ConditionReport::qcmi_keys()[i] + " vanishes but " + eqs[i] +
                                 " fails (" + std::to_string(us[i]) + " vs " +
                                 std::to_string(ls[i]) + ")");
        rep.consistency.push_back(eqs[i]);
        cands.push_back({static_cast<Certificate>(i), us[i]});
    }
    if (rep.r_trivial) {
        // No referee: the cost is exactly l1 = H(AC_B) - H(AC_A). The four QCMI
        // conditions hold vacuously here, so this is the informative certificate
        // and takes priority.
        rep.consistency.push_back("e_opt = H(AC_B) - H(AC_A)");
        cands.insert(cands.begin(), {Certificate::Cor3iii, l1});
    }
    for (size_t i = 1; i < cands.size(); ++i)
        if (std::abs(cands[i].value - cands[0].value) > eq_tol)
            throw NumericalError("certificate inconsistency: " +
                                 certificate_name(cands[0].cert) + " gives " +
                                 std::to_string(cands[0].value) + " but " +
                                 certificate_name(cands[i].cert) + " gives " +
                                 std::to_string(cands[i].value));
    if (!cands.empty()) {
        rep.exact_cost = cands[0].value;
        rep.certificate = cands[0].cert;
    }
    return rep;
}

LabeledPureState appendixc_state() {
    LabeledPureState s;
    s.layout = five_qubit_layout();
    s.amps.assign(32, 0.0);
    const double c = 1.0 / std::sqrt(3.0);
    s.amps[0b00000] = c;
    s.amps[0b01100] = c;
    s.amps[0b10011] = c;
    return s;
}

AppendixCReport appendixc_noninclusion_suite() {
    const LabeledPureState base = appendixc_state();
    AppendixCReport rep;
    rep.ok = true;

    const char* ys[4] = {"C_A", "C_A", "C_B", "C_B"};
    const char* zs[4] = {"A", "B", "A", "B"};
    for (int variant = 0; variant < 4; ++variant) {
        LabeledPureState s = base;
        // Swapping A<->B moves the vanishing condition from (R;C_A|A) to
        // (R;C_A|B); swapping C_A<->C_B moves it to the C_B column.
        if (variant & 1) std::swap(s.layout.role_labels(Role::A), s.layout.role_labels(Role::B));
        if (variant & 2) std::swap(s.layout.role_labels(Role::CA), s.layout.role_labels(Role::CB));
        for (int i = 0; i < 4; ++i) {
            rep.qcmi[variant][i] = qcmi(s, {"R"}, {ys[i]}, {zs[i]});
            const bool should_vanish = (i == variant);
            if (should_vanish && std::abs(rep.qcmi[variant][i]) > 1e-9) {
                rep.ok = false;
                rep.failures.push_back("variant " + std::to_string(variant) + ": " +
                                       ConditionReport::qcmi_keys()[i] + " should vanish, got " +
                                       std::to_string(rep.qcmi[variant][i]));
            }
            if (!should_vanish && rep.qcmi[variant][i] <= 0.05) {
                rep.ok = false;
                rep.failures.push_back("variant " + std::to_string(variant) + ": " +
                                       ConditionReport::qcmi_keys()[i] +
                                       " should be positive, got " +
                                       std::to_string(rep.qcmi[variant][i]));
            }
        }
    }
    return rep;
}

}  // namespace sxq
