#pragma once

#include <string>
#include <vector>

#include "sxq/linalg.hpp"
#include "sxq/state.hpp"

namespace sxq {

// Reduced state on `labels` (ordered as in the parent layout's declaration).
struct DensityMatrix {
    std::vector<Factor> factors;  // retained factors, declaration order
    CMat matrix;

    long dim() const { return matrix.n; }
    int factor_index(const std::string& label) const;
    double trace() const;

    // Hermiticity (1e-10), unit trace (1e-9), eigenvalues >= -1e-10.
    void validate() const;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
};

// Resolves a mix of role names (A, C_A, B, C_B, R) and raw factor labels to a
// deduplicated label list. Throws std::invalid_argument on unknown names.
std::vector<std::string> resolve_labels(const SubsystemLayout& layout,
                                        const std::vector<std::string>& names);

// Partial trace of a pure state over the complement of `keep`.
DensityMatrix reduce(const LabeledPureState& s, const std::vector<std::string>& keep);

// Partial trace of a density matrix down to `keep` (nonempty subset of rho's labels).
DensityMatrix reduce_dm(const DensityMatrix& rho, const std::vector<std::string>& keep);

// Eigenvalues sorted descending, residual-checked decomposition.
Spectrum hermitian_spectrum(const DensityMatrix& rho);

// Von Neumann entropy in bits. Eigenvalues in [-1e-10, 0) clamp to zero;
// anything more negative is a NumericalError.
double entropy(const DensityMatrix& rho);

// Entropy of the reduced state on the resolved label set; empty set -> 0.
double entropy_of(const LabeledPureState& s, const std::vector<std::string>& names);

// H(X|Y) = H(XY) - H(Y); X and Y must resolve to disjoint label sets.
double cond_entropy(const LabeledPureState& s, const std::vector<std::string>& X,
                    const std::vector<std::string>& Y);

// I(X;Y|Z) = H(XZ) + H(YZ) - H(Z) - H(XYZ) over disjoint resolved sets.
double qcmi(const LabeledPureState& s, const std::vector<std::string>& X,
            const std::vector<std::string>& Y, const std::vector<std::string>& Z);

// -p log2 p - (1-p) log2 (1-p), endpoints 0. Throws outside [0,1].
double binary_entropy(double p);

}  // namespace sxq
