#pragma once

#include <random>

#include "sxq/layout.hpp"
#include "sxq/linalg.hpp"

namespace sxq {

// Unit-norm amplitude vector over the layout's factors, row-major in
// declaration order.
struct LabeledPureState {
    SubsystemLayout layout;
    cvec amps;

    // Checks layout invariants, the length match, and the unit norm (1e-9).
    void validate() const;
    double norm() const;
};

// (1/sqrt(d)) sum_k |kkk> over three d-dimensional factors.
cvec build_ghz(int d);

// (1/sqrt(d)) sum_k |kk> over two d-dimensional factors.
cvec build_maxent(int d);

// Ownership swap: identical amplitudes, role lists of C_A and C_B exchanged.
LabeledPureState exchanged_state(const LabeledPureState& s);

// Tensor product; factor lists concatenated, roles merged (labels must not clash).
LabeledPureState tensor(const LabeledPureState& x, const LabeledPureState& y);

// Haar-like random pure state on the given layout (complex Gaussian, normalized).
LabeledPureState random_state(const SubsystemLayout& layout, std::mt19937_64& rng);

inline LabeledPureState random_state(const SubsystemLayout& layout, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_state(layout, rng);
}

// Five qubit factors a,ca,b,cb,r, one per role.
SubsystemLayout five_qubit_layout();

}  // namespace sxq
