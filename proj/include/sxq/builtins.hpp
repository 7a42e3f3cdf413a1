#pragma once

#include <string>
#include <vector>

namespace sxq {

// Embedded state definitions: eq8.sx, eq2.sx, eq5.sx, appendix-c.sx.
const std::string& builtin_state_text(const std::string& name);
std::vector<std::string> builtin_state_names();

}  // namespace sxq
