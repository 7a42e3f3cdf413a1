#pragma once

#include <string>
#include <vector>

namespace sxq {

// Deliberate tampering hooks used to prove the checks can fail:
// NatLog evaluates the appendix-c entropies in nats, RoleOrder attaches the
// GHZ legs of the gap identity to the wrong roles.
enum class Fault { None, NatLog, RoleOrder };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The built-in verification suite: appendix-c regression, the lambda sweep,
// the GHZ gap identity, the converse-gap example, the random-state property
// suite, and trivial-split consistency.
std::vector<CheckResult> run_paper_checks(Fault fault = Fault::None);

}  // namespace sxq
