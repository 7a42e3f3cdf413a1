#include "sxq/layout.hpp"

#include <set>
#include <stdexcept>

namespace sxq {

const std::string& role_name(Role r) {
    static const std::array<std::string, 5> names = {"A", "C_A", "B", "C_B", "R"};
    return names[static_cast<int>(r)];
}

bool parse_role_name(const std::string& name, Role& out) {
    for (Role r : kAllRoles) {
        if (name == role_name(r)) {
            out = r;
            return true;
        }
    }
    return false;
}

long SubsystemLayout::total_dim() const {
    long d = 1;
    for (const auto& f : factors) d *= f.dim;
    return d;
}

int SubsystemLayout::factor_index(const std::string& label) const {
    for (size_t i = 0; i < factors.size(); ++i)
        if (factors[i].label == label) return static_cast<int>(i);
    return -1;
}

void SubsystemLayout::validate() const {
    std::set<std::string> seen;
    for (const auto& f : factors) {
        if (f.dim < 2)
            throw std::invalid_argument("factor '" + f.label + "' has dimension " +
                                        std::to_string(f.dim) + ", need >= 2");
        if (!seen.insert(f.label).second)
            throw std::invalid_argument("duplicate factor label '" + f.label + "'");
    }
    std::set<std::string> assigned;
    for (Role r : kAllRoles) {
        for (const auto& lbl : role_labels(r)) {
            if (factor_index(lbl) < 0)
                throw std::invalid_argument("role " + role_name(r) + " names unknown factor '" +
                                            lbl + "'");
            if (!assigned.insert(lbl).second)
                throw std::invalid_argument("factor '" + lbl + "' assigned to two roles");
        }
    }
    for (const auto& f : factors)
        if (!assigned.count(f.label))
            throw std::invalid_argument("factor '" + f.label + "' not assigned to any role");
    if (role_labels(Role::CA).empty() || role_labels(Role::CB).empty())
        throw std::invalid_argument("roles C_A and C_B must be nonempty");
    if (total_dim() < 2) throw std::invalid_argument("total dimension must be >= 2");
}

}  // namespace sxq
