#pragma once

#include <array>
#include <string>
#include <vector>

namespace sxq {

// The five ownership roles of the exchange task: Alice's side information,
// Alice's transferred part, Bob's side information, Bob's transferred part,
// and the referee.
enum class Role { A = 0, CA = 1, B = 2, CB = 3, R = 4 };

inline constexpr std::array<Role, 5> kAllRoles = {Role::A, Role::CA, Role::B, Role::CB, Role::R};

const std::string& role_name(Role r);
bool parse_role_name(const std::string& name, Role& out);

struct Factor {
    std::string label;
    int dim = 0;
};

// Ordered tensor factors plus the assignment of each factor to a role.
// An empty role list is a trivial (dimension-1) role.
struct SubsystemLayout {
    std::vector<Factor> factors;
    std::array<std::vector<std::string>, 5> roles;

    long total_dim() const;
    int factor_index(const std::string& label) const;  // -1 if absent
    const std::vector<std::string>& role_labels(Role r) const { return roles[static_cast<int>(r)]; }
    std::vector<std::string>& role_labels(Role r) { return roles[static_cast<int>(r)]; }

    // Throws std::invalid_argument when an invariant fails: duplicate labels,
    // a factor outside every role or in two roles, dim < 2 for a declared
    // factor, or trivial C_A/C_B.
    void validate() const;
};

}  // namespace sxq
