#include "sxq/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace sxq {

int DensityMatrix::factor_index(const std::string& label) const {
    for (size_t i = 0; i < factors.size(); ++i)
        if (factors[i].label == label) return static_cast<int>(i);
    return -1;
}

double DensityMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < matrix.n; ++i) t += matrix(i, i).real();
    return t;
}

void DensityMatrix::validate() const {
    long d = 1;
    for (const auto& f : factors) d *= f.dim;
    if (d != matrix.n) throw std::invalid_argument("density matrix dimension/label mismatch");
    if (hermiticity_defect(matrix) > 1e-10)
        throw std::invalid_argument("density matrix not Hermitian within 1e-10");
    if (std::abs(trace() - 1.0) > 1e-9)
        throw std::invalid_argument("density matrix trace is not 1 within 1e-9");
    for (double w : jacobi_eigenvalues(matrix))
        if (w < -1e-10) throw std::invalid_argument("density matrix has eigenvalue < -1e-10");
}

std::vector<std::string> resolve_labels(const SubsystemLayout& layout,
                                        const std::vector<std::string>& names) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    auto push = [&](const std::string& lbl) {
        if (seen.insert(lbl).second) out.push_back(lbl);
    };
    for (const auto& name : names) {
        Role r;
        if (parse_role_name(name, r)) {
            for (const auto& lbl : layout.role_labels(r)) push(lbl);
        } else if (layout.factor_index(name) >= 0) {
            push(name);
        } else {
            throw std::invalid_argument("unknown role or factor label '" + name + "'");
        }
    }
    return out;
}

namespace {

// Row-major strides and the (keep, rest) sub-index of every global index.
struct SplitIndexer {
    long keep_dim = 1, rest_dim = 1;
    std::vector<long> keep_of, rest_of;  // indexed by global index

    SplitIndexer(const std::vector<Factor>& factors, const std::vector<bool>& kept) {
        const int n = static_cast<int>(factors.size());
        long total = 1;
        for (const auto& f : factors) total *= f.dim;
        for (int i = 0; i < n; ++i) (kept[i] ? keep_dim : rest_dim) *= factors[i].dim;
        keep_of.assign(total, 0);
        rest_of.assign(total, 0);
        std::vector<int> digits(n, 0);
        for (long g = 0; g < total; ++g) {
            long k = 0, r = 0;
            for (int i = 0; i < n; ++i)
                if (kept[i])
                    k = k * factors[i].dim + digits[i];
                else
                    r = r * factors[i].dim + digits[i];
            keep_of[g] = k;
            rest_of[g] = r;
            for (int i = n - 1; i >= 0; --i) {
                if (++digits[i] < factors[i].dim) break;
                digits[i] = 0;
            }
        }
    }
};

std::vector<bool> kept_mask(const std::vector<Factor>& factors,
                            const std::vector<std::string>& keep) {
    std::vector<bool> mask(factors.size(), false);
    for (const auto& lbl : keep) {
        bool found = false;
        for (size_t i = 0; i < factors.size(); ++i)
            if (factors[i].label == lbl) {
                mask[i] = true;
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown factor label '" + lbl + "'");
    }
    return mask;
}

}  // namespace

DensityMatrix reduce(const LabeledPureState& s, const std::vector<std::string>& keep) {
    const auto& factors = s.layout.factors;
    const auto mask = kept_mask(factors, keep);
    SplitIndexer ix(factors, mask);

    // psi reshaped to keep x rest, then rho = M M^dag.
    std::vector<cvec> m(ix.keep_dim, cvec(ix.rest_dim, 0.0));
    for (size_t g = 0; g < s.amps.size(); ++g) m[ix.keep_of[g]][ix.rest_of[g]] = s.amps[g];

    DensityMatrix rho;
    for (size_t i = 0; i < factors.size(); ++i)
        if (mask[i]) rho.factors.push_back(factors[i]);
    rho.matrix = CMat(static_cast<int>(ix.keep_dim));
    for (long i = 0; i < ix.keep_dim; ++i)
        for (long j = i; j < ix.keep_dim; ++j) {
            cplx acc = 0.0;
            for (long r = 0; r < ix.rest_dim; ++r) acc += m[i][r] * std::conj(m[j][r]);
            rho.matrix(static_cast<int>(i), static_cast<int>(j)) = acc;
            rho.matrix(static_cast<int>(j), static_cast<int>(i)) = std::conj(acc);
        }
    return rho;
}

DensityMatrix reduce_dm(const DensityMatrix& rho, const std::vector<std::string>& keep) {
    if (keep.empty()) throw std::invalid_argument("reduce_dm: empty retention set");
    const auto mask = kept_mask(rho.factors, keep);
    SplitIndexer ix(rho.factors, mask);

    std::vector<long> full_of(ix.keep_dim * ix.rest_dim);
    for (long g = 0; g < rho.matrix.n; ++g) full_of[ix.keep_of[g] * ix.rest_dim + ix.rest_of[g]] = g;

    DensityMatrix out;
    for (size_t i = 0; i < rho.factors.size(); ++i)
        if (mask[i]) out.factors.push_back(rho.factors[i]);
    out.matrix = CMat(static_cast<int>(ix.keep_dim));
    for (long i = 0; i < ix.keep_dim; ++i)
        for (long j = 0; j < ix.keep_dim; ++j) {
            cplx acc = 0.0;
            for (long r = 0; r < ix.rest_dim; ++r)
                acc += rho.matrix(static_cast<int>(full_of[i * ix.rest_dim + r]),
                                  static_cast<int>(full_of[j * ix.rest_dim + r]));
            out.matrix(static_cast<int>(i), static_cast<int>(j)) = acc;
        }
    return out;
}

Spectrum hermitian_spectrum(const DensityMatrix& rho) {
    auto w = jacobi_eigenvalues(rho.matrix);
    std::sort(w.begin(), w.end(), std::greater<double>());
    return Spectrum{std::move(w)};
}

double entropy(const DensityMatrix& rho) {
    const auto spec = hermitian_spectrum(rho);
    double h = 0.0;
    for (double p : spec.eigenvalues) {
        if (p < -1e-10)
            throw NumericalError("entropy: eigenvalue " + std::to_string(p) + " below -1e-10");
        if (p <= 0.0) continue;
        h -= p * std::log2(p);
    }
    return std::max(h, 0.0);
}

double entropy_of(const LabeledPureState& s, const std::vector<std::string>& names) {
    const auto labels = resolve_labels(s.layout, names);
    if (labels.empty() || labels.size() == s.layout.factors.size()) return 0.0;  // pure

    // The global state is pure, so H(X) = H(complement of X); diagonalize the
    // smaller marginal.
    std::set<std::string> keep(labels.begin(), labels.end());
    long keep_dim = 1, rest_dim = 1;
    for (const auto& f : s.layout.factors) (keep.count(f.label) ? keep_dim : rest_dim) *= f.dim;
    if (keep_dim <= rest_dim) return entropy(reduce(s, labels));
    std::vector<std::string> complement;
    for (const auto& f : s.layout.factors)
        if (!keep.count(f.label)) complement.push_back(f.label);
    return entropy(reduce(s, complement));
}

namespace {

void check_disjoint(const std::vector<std::string>& x, const std::vector<std::string>& y,
                    const char* what) {
    std::set<std::string> sx(x.begin(), x.end());
    for (const auto& lbl : y)
        if (sx.count(lbl)) throw std::invalid_argument(std::string(what) + ": sets overlap on '" + lbl + "'");
}

std::vector<std::string> unioned(std::initializer_list<const std::vector<std::string>*> sets) {
    std::vector<std::string> out;
    for (const auto* s : sets) out.insert(out.end(), s->begin(), s->end());
    return out;
}

}  // namespace

double cond_entropy(const LabeledPureState& s, const std::vector<std::string>& X,
                    const std::vector<std::string>& Y) {
    const auto x = resolve_labels(s.layout, X);
    const auto y = resolve_labels(s.layout, Y);
    check_disjoint(x, y, "cond_entropy");
    return entropy_of(s, unioned({&x, &y})) - entropy_of(s, y);
}

double qcmi(const LabeledPureState& s, const std::vector<std::string>& X,
            const std::vector<std::string>& Y, const std::vector<std::string>& Z) {
    const auto x = resolve_labels(s.layout, X);
    const auto y = resolve_labels(s.layout, Y);
    const auto z = resolve_labels(s.layout, Z);
    check_disjoint(x, y, "qcmi");
    check_disjoint(x, z, "qcmi");
    check_disjoint(y, z, "qcmi");
    return entropy_of(s, unioned({&x, &z})) + entropy_of(s, unioned({&y, &z})) -
           entropy_of(s, z) - entropy_of(s, unioned({&x, &y, &z}));
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p outside [0,1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

}  // namespace sxq
