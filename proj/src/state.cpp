#include "sxq/state.hpp"

#include <cmath>
#include <stdexcept>

namespace sxq {

double LabeledPureState::norm() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

void LabeledPureState::validate() const {
    layout.validate();
    if (static_cast<long>(amps.size()) != layout.total_dim())
        throw std::invalid_argument("amplitude length " + std::to_string(amps.size()) +
                                    " does not match total dimension " +
                                    std::to_string(layout.total_dim()));
    if (std::abs(norm() - 1.0) > 1e-9)
        throw std::invalid_argument("state norm " + std::to_string(norm()) + " is not 1");
}

cvec build_ghz(int d) {
    if (d < 2) throw std::invalid_argument("build_ghz: d must be >= 2");
    cvec v(static_cast<size_t>(d) * d * d, 0.0);
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) v[(static_cast<size_t>(k) * d + k) * d + k] = c;
    return v;
}

cvec build_maxent(int d) {
    if (d < 2) throw std::invalid_argument("build_maxent: d must be >= 2");
    cvec v(static_cast<size_t>(d) * d, 0.0);
    const double c = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) v[static_cast<size_t>(k) * d + k] = c;
    return v;
}

LabeledPureState exchanged_state(const LabeledPureState& s) {
    LabeledPureState out = s;
    std::swap(out.layout.role_labels(Role::CA), out.layout.role_labels(Role::CB));
    return out;
}

LabeledPureState tensor(const LabeledPureState& x, const LabeledPureState& y) {
    LabeledPureState out;
    out.layout.factors = x.layout.factors;
    for (const auto& f : y.layout.factors) {
        if (x.layout.factor_index(f.label) >= 0)
            throw std::invalid_argument("tensor: duplicate factor label '" + f.label + "'");
        out.layout.factors.push_back(f);
    }
    for (Role r : kAllRoles) {
        out.layout.role_labels(r) = x.layout.role_labels(r);
        for (const auto& lbl : y.layout.role_labels(r)) out.layout.role_labels(r).push_back(lbl);
    }
    out.amps.resize(x.amps.size() * y.amps.size());
    const size_t ny = y.amps.size();
    for (size_t i = 0; i < x.amps.size(); ++i)
        for (size_t j = 0; j < ny; ++j) out.amps[i * ny + j] = x.amps[i] * y.amps[j];
    return out;
}

LabeledPureState random_state(const SubsystemLayout& layout, std::mt19937_64& rng) {
    LabeledPureState s;
    s.layout = layout;
    std::normal_distribution<double> gauss(0.0, 1.0);
    s.amps.resize(layout.total_dim());
    for (auto& a : s.amps) a = cplx(gauss(rng), gauss(rng));
    double n = s.norm();
    for (auto& a : s.amps) a /= n;
    return s;
}

SubsystemLayout five_qubit_layout() {
    SubsystemLayout l;
    l.factors = {{"a", 2}, {"ca", 2}, {"b", 2}, {"cb", 2}, {"r", 2}};
    l.role_labels(Role::A) = {"a"};
    l.role_labels(Role::CA) = {"ca"};
    l.role_labels(Role::B) = {"b"};
    l.role_labels(Role::CB) = {"cb"};
    l.role_labels(Role::R) = {"r"};
    return l;
}

}  // namespace sxq
