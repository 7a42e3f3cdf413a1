#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "sxq/state.hpp"

namespace sxq {

// Parameter bindings for states with free parameters (e.g. a sweep variable).
struct ParamEnv {
    std::map<std::string, double> bindings;

    // Validates the identifier grammar and finiteness.
    void set(const std::string& name, double value);
    bool has(const std::string& name) const { return bindings.count(name) != 0; }
    double get(const std::string& name) const;
};

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line_, int column_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

// Parses the line-oriented state definition language. `env` overrides any
// `param` defaults in the text. The result is unit norm; without
// `normalize on` a raw norm off by more than 1e-9 is a ParseError.
LabeledPureState parse_state(const std::string& text, const ParamEnv& env = {});

// Emits a state definition that re-parses to the same amplitudes (1e-12).
std::string serialize_state(const LabeledPureState& s);

}  // namespace sxq
