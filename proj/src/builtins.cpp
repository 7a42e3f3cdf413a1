#include "sxq/builtins.hpp"

#include <map>
#include <stdexcept>

namespace sxq {

namespace {

const std::map<std::string, std::string>& builtin_map() {
    static const std::map<std::string, std::string> states = {
        {"eq8.sx",
         "# One-parameter qubit family whose exchange cost turns negative for large lambda.\n"
         "systems a:2 ca:2 b:2 cb:2 r:2\n"
         "roles A=a C_A=ca B=b C_B=cb R=r\n"
         "param lambda = 0.5\n"
         "ket sqrt(lambda/2) |00000>\n"
         "ket sqrt((1-lambda)/2) |10011>\n"
         "ket sqrt(lambda/2) |01100>\n"
         "ket sqrt((1-lambda)/2) |01010>\n"},
        {"eq2.sx",
         "# A Bell pair on (ca1, cb1) tensored with a GHZ triple shared with the referee.\n"
         "systems ca1:2 cb1:2 ca2:2 cb2:2 r2:2\n"
         "roles A=- C_A=ca1,ca2 B=- C_B=cb1,cb2 R=r2\n"
         "factor maxent(2) @ (ca1,cb1)\n"
         "factor ghz(2) @ (ca2,cb2,r2)\n"},
        {"eq5.sx",
         "# Four Bell pairs, each role maximally entangled with its own referee factor.\n"
         "systems a:2 ca:2 b:2 cb:2 ra:2 rca:2 rb:2 rcb:2\n"
         "roles A=a C_A=ca B=b C_B=cb R=ra,rca,rb,rcb\n"
         "factor maxent(2) @ (a,ra)\n"
         "factor maxent(2) @ (ca,rca)\n"
         "factor maxent(2) @ (b,rb)\n"
         "factor maxent(2) @ (cb,rcb)\n"},
        {"appendix-c.sx",
         "# Three-term state satisfying exactly one of the four exact-cost conditions.\n"
         "systems a:2 ca:2 b:2 cb:2 r:2\n"
         "roles A=a C_A=ca B=b C_B=cb R=r\n"
         "normalize on\n"
         "ket 1 |00000>\n"
         "ket 1 |01100>\n"
         "ket 1 |10011>\n"},
    };
    return states;
}

}  // namespace

const std::string& builtin_state_text(const std::string& name) {
    const auto& m = builtin_map();
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown builtin state '" + name + "'");
    return it->second;
}

std::vector<std::string> builtin_state_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : builtin_map()) names.push_back(k);
    return names;
}

}  // namespace sxq
