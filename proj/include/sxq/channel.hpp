#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sxq/entropy.hpp"

namespace sxq {

// A channel N: R -> V, either a coarse split of R's factors (V keeps
// `v_labels`, the rest goes to the environment E) or an explicit Stinespring
// isometry W: R -> V (x) E.
struct ChannelSpec {
    enum class Kind { Split, Isometry };
    Kind kind = Kind::Split;

    // Split
    std::vector<std::string> v_labels;

    // Isometry; `matrix` is (dim_v*dim_e) x dim_r row-major with row index
    // v*dim_e + e, and must satisfy W^dag W = 1 within 1e-8.
    int dim_v = 1, dim_e = 1;
    cvec matrix;

    static ChannelSpec split(std::vector<std::string> v_labels);
    static ChannelSpec isometry(int dim_v, int dim_e, cvec matrix);
    std::string summary() const;
};

// The global pure state after routing R through the channel, with the label
// sets that ended up on the V and E sides.
struct PostChannelState {
    LabeledPureState state;
    std::vector<std::string> v_labels, e_labels;
};

PostChannelState apply_channel(const LabeledPureState& s, const ChannelSpec& c);

// Converse objective H(A C_B V) - H(A C_A V) on the post-channel state.
double converse_value(const LabeledPureState& s, const ChannelSpec& c);

struct OptimizeConfig {
    int dim_v = 0, dim_e = 0;  // 0: default to dim R
    int restarts = 8;
    int max_iters = 100;
    double step_tol = 1e-7;
    std::uint64_t seed = 0;
    bool splits_only = false;
};

struct ConverseResult {
    double value = 0;  // best over all candidates; a lower bound on l(psi)
    ChannelSpec best_channel;
    std::string best_label;
    struct Candidate {
        std::string label;
        double value;
    };
    std::vector<Candidate> per_candidate;
    double best_split = 0;
    double best_continuous = 0;  // -inf surrogate when splits_only
    bool continuous_ran = false;
    int iterations = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
};

// Exhaustive split enumeration (<= 2^12 subsets) plus, unless splits_only,
// finite-difference gradient ascent over isometries with random restarts.
// The result is a certified lower bound on l(psi), not l(psi) itself.
ConverseResult optimize_converse(const LabeledPureState& s, const OptimizeConfig& cfg);

struct Cor3iiCertificate {
    bool certified_u1 = false, certified_u2 = false;
    // I(C_B;V|A), I(C_A;E|AV), I(C_A;E|B), I(C_B;V|BE) on the post-channel state.
    double qcmi_values[4] = {0, 0, 0, 0};
    double exact_cost = 0;  // meaningful only when certified
    std::string certificate;
};

// Certifies e_opt = u1 when the first QCMI pair vanishes
// (<= tol) and e_opt = u2 when the second pair does; cross-checks the
// certified value against converse_value within 1e-6.
Cor3iiCertificate certify_cor3ii(const LabeledPureState& s, const ChannelSpec& c, double tol);

}  // namespace sxq
