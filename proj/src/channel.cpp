#include "sxq/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sxq/bounds.hpp"

namespace sxq {

ChannelSpec ChannelSpec::split(std::vector<std::string> v_labels) {
    ChannelSpec c;
    c.kind = Kind::Split;
    c.v_labels = std::move(v_labels);
    return c;
}

ChannelSpec ChannelSpec::isometry(int dim_v, int dim_e, cvec matrix) {
    ChannelSpec c;
    c.kind = Kind::Isometry;
    c.dim_v = dim_v;
    c.dim_e = dim_e;
    c.matrix = std::move(matrix);
    return c;
}

std::string ChannelSpec::summary() const {
    std::ostringstream out;
    if (kind == Kind::Split) {
        out << "split{";
        for (size_t i = 0; i < v_labels.size(); ++i) out << (i ? "," : "") << v_labels[i];
        out << "}";
    } else {
        out << "isometry{dim_v=" << dim_v << ",dim_e=" << dim_e << "}";
    }
    return out.str();
}

namespace {

long r_dimension(const SubsystemLayout& layout) {
    long d = 1;
    for (const auto& lbl : layout.role_labels(Role::R)) d *= layout.factors[layout.factor_index(lbl)].dim;
    return d;
}

std::string fresh_label(const SubsystemLayout& layout, std::string base) {
    while (layout.factor_index(base) >= 0) base += "_";
    return base;
}

// Applies W: R -> V(x)E to the amplitude vector; no isometry check here.
LabeledPureState apply_isometry_raw(const LabeledPureState& s, int dim_v, int dim_e,
                                    const cvec& w, std::string* v_name, std::string* e_name) {
    const auto& factors = s.layout.factors;
    const auto& r_labels = s.layout.role_labels(Role::R);
    std::set<std::string> r_set(r_labels.begin(), r_labels.end());

    long non_r_dim = 1, r_dim = 1;
    for (const auto& f : factors) (r_set.count(f.label) ? r_dim : non_r_dim) *= f.dim;
    const long out_dim = static_cast<long>(dim_v) * dim_e;

    // Reshape to (non-R, R), both row-major in declaration order.
    std::vector<cvec> m(non_r_dim, cvec(r_dim, 0.0));
    {
        std::vector<int> digits(factors.size(), 0);
        for (size_t g = 0; g < s.amps.size(); ++g) {
            long nid = 0, rid = 0;
            for (size_t i = 0; i < factors.size(); ++i)
                if (r_set.count(factors[i].label))
                    rid = rid * factors[i].dim + digits[i];
                else
                    nid = nid * factors[i].dim + digits[i];
            m[nid][rid] = s.amps[g];
            for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
                if (++digits[i] < factors[i].dim) break;
                digits[i] = 0;
            }
        }
    }

    LabeledPureState out;
    for (const auto& f : factors)
        if (!r_set.count(f.label)) out.layout.factors.push_back(f);
    const std::string vl = fresh_label(s.layout, "V");
    const std::string el = fresh_label(s.layout, "E");
    if (dim_v > 1) out.layout.factors.push_back({vl, dim_v});
    if (dim_e > 1) out.layout.factors.push_back({el, dim_e});
    for (Role r : kAllRoles)
        if (r != Role::R) out.layout.role_labels(r) = s.layout.role_labels(r);
    if (dim_v > 1) out.layout.role_labels(Role::R).push_back(vl);
    if (dim_e > 1) out.layout.role_labels(Role::R).push_back(el);
    if (v_name) *v_name = dim_v > 1 ? vl : std::string();
    if (e_name) *e_name = dim_e > 1 ? el : std::string();

    out.amps.assign(non_r_dim * out_dim, 0.0);
    for (long n = 0; n < non_r_dim; ++n)
        for (long row = 0; row < out_dim; ++row) {
            cplx acc = 0.0;
            for (long r = 0; r < r_dim; ++r) acc += w[row * r_dim + r] * m[n][r];
            out.amps[n * out_dim + row] = acc;
        }
    return out;
}

}  // namespace

PostChannelState apply_channel(const LabeledPureState& s, const ChannelSpec& c) {
    const auto& r_labels = s.layout.role_labels(Role::R);
    if (c.kind == ChannelSpec::Kind::Split) {
        std::set<std::string> r_set(r_labels.begin(), r_labels.end());
        for (const auto& lbl : c.v_labels)
            if (!r_set.count(lbl))
                throw std::invalid_argument("split label '" + lbl + "' is not an R factor");
        PostChannelState out{s, c.v_labels, {}};
        std::set<std::string> v_set(c.v_labels.begin(), c.v_labels.end());
        for (const auto& lbl : r_labels)
            if (!v_set.count(lbl)) out.e_labels.push_back(lbl);
        return out;
    }

    const long r_dim = r_dimension(s.layout);
    const long out_dim = static_cast<long>(c.dim_v) * c.dim_e;
    if (c.dim_v < 1 || c.dim_e < 1 || out_dim < r_dim)
        throw std::invalid_argument("isometry output dimension " + std::to_string(out_dim) +
                                    " smaller than dim R " + std::to_string(r_dim));
    if (static_cast<long>(c.matrix.size()) != out_dim * r_dim)
        throw std::invalid_argument("isometry matrix size mismatch");
    // W^dag W = 1 within 1e-8.
    for (long i = 0; i < r_dim; ++i)
        for (long j = i; j < r_dim; ++j) {
            cplx acc = 0.0;
            for (long k = 0; k < out_dim; ++k)
                acc += std::conj(c.matrix[k * r_dim + i]) * c.matrix[k * r_dim + j];
            if (std::abs(acc - (i == j ? 1.0 : 0.0)) > 1e-8)
                throw std::invalid_argument("matrix is not an isometry (W^dag W != 1)");
        }

    PostChannelState out;
    std::string vl, el;
    out.state = apply_isometry_raw(s, c.dim_v, c.dim_e, c.matrix, &vl, &el);
    if (!vl.empty()) out.v_labels.push_back(vl);
    if (!el.empty()) out.e_labels.push_back(el);
    return out;
}

namespace {

double objective_on(const PostChannelState& post) {
    std::vector<std::string> acbv = {"A", "C_B"};
    std::vector<std::string> acav = {"A", "C_A"};
    for (const auto& lbl : post.v_labels) {
        acbv.push_back(lbl);
        acav.push_back(lbl);
    }
    return entropy_of(post.state, acbv) - entropy_of(post.state, acav);
}

}  // namespace

double converse_value(const LabeledPureState& s, const ChannelSpec& c) {
    return objective_on(apply_channel(s, c));
}

namespace {

// Continuous ascent objective. Index maps are precomputed once so the inner
// loop (hundreds of thousands of finite-difference probes) runs without
// label lookups or heap allocation; correctness against the label-based
// path is re-checked once per restart in optimize_converse.
struct IsometryObjective {
    int dim_v, dim_e;
    long r_dim = 1, non_r_dim = 1, out_dim;
    cvec m;  // state reshaped to (non-R, R), index n*r_dim + r

    // One per entropy term: H(A C_B V) and H(A C_A V).
    struct Target {
        std::vector<long> keep_of_n, rest_of_n;  // non-R index decomposition
        long keep_dim = 1, rest_dim = 1;         // after appending V resp. E
    };
    Target targets[2];

    struct Scratch {
        cvec cols, post, psi;
        CMat gram;
    };

    IsometryObjective(const LabeledPureState& s, int dv, int de)
        : dim_v(dv), dim_e(de), out_dim(static_cast<long>(dv) * de) {
        const auto& factors = s.layout.factors;
        const auto& r_labels = s.layout.role_labels(Role::R);
        std::set<std::string> r_set(r_labels.begin(), r_labels.end());
        for (const auto& f : factors) (r_set.count(f.label) ? r_dim : non_r_dim) *= f.dim;

        m.assign(non_r_dim * r_dim, 0.0);
        std::vector<int> digits(factors.size(), 0);
        for (size_t g = 0; g < s.amps.size(); ++g) {
            long nid = 0, rid = 0;
            for (size_t i = 0; i < factors.size(); ++i)
                if (r_set.count(factors[i].label))
                    rid = rid * factors[i].dim + digits[i];
                else
                    nid = nid * factors[i].dim + digits[i];
            m[nid * r_dim + rid] = s.amps[g];
            for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
                if (++digits[i] < factors[i].dim) break;
                digits[i] = 0;
            }
        }

        for (int t = 0; t < 2; ++t) {
            Target& tg = targets[t];
            std::set<std::string> keep;
            for (const auto& lbl : s.layout.role_labels(Role::A)) keep.insert(lbl);
            for (const auto& lbl : s.layout.role_labels(t == 0 ? Role::CB : Role::CA))
                keep.insert(lbl);
            long kdim = 1, rdim = 1;
            for (const auto& f : factors)
                if (!r_set.count(f.label)) (keep.count(f.label) ? kdim : rdim) *= f.dim;
            tg.keep_of_n.assign(non_r_dim, 0);
            tg.rest_of_n.assign(non_r_dim, 0);
            std::fill(digits.begin(), digits.end(), 0);
            for (size_t g = 0; g < s.amps.size(); ++g) {
                long nid = 0, kid = 0, rid = 0;
                for (size_t i = 0; i < factors.size(); ++i) {
                    if (r_set.count(factors[i].label)) continue;
                    nid = nid * factors[i].dim + digits[i];
                    if (keep.count(factors[i].label))
                        kid = kid * factors[i].dim + digits[i];
                    else
                        rid = rid * factors[i].dim + digits[i];
                }
                tg.keep_of_n[nid] = kid;
                tg.rest_of_n[nid] = rid;
                for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
                    if (++digits[i] < factors[i].dim) break;
                    digits[i] = 0;
                }
            }
            tg.keep_dim = kdim * dim_v;
            tg.rest_dim = rdim * dim_e;
        }
    }

    double eval(const std::vector<double>& params, Scratch& sc) const {
        const size_t half = static_cast<size_t>(out_dim) * r_dim;
        sc.cols.resize(half);
        for (size_t k = 0; k < half; ++k) sc.cols[k] = cplx(params[k], params[half + k]);
        orthonormalize_columns(sc.cols, static_cast<int>(out_dim), static_cast<int>(r_dim));

        sc.post.resize(static_cast<size_t>(non_r_dim) * out_dim);
        for (long n = 0; n < non_r_dim; ++n) {
            const cplx* mr = m.data() + n * r_dim;
            cplx* pr = sc.post.data() + n * out_dim;
            for (long row = 0; row < out_dim; ++row) {
                const cplx* wr = sc.cols.data() + row * r_dim;
                cplx acc = 0.0;
                for (long r = 0; r < r_dim; ++r) acc += wr[r] * mr[r];
                pr[row] = acc;
            }
        }

        double value = 0.0;
        for (int t = 0; t < 2; ++t) {
            const Target& tg = targets[t];
            // Gram matrix on the smaller side of the (keep, rest) bipartition.
            const bool keep_small = tg.keep_dim <= tg.rest_dim;
            const long side = keep_small ? tg.keep_dim : tg.rest_dim;
            const long other = keep_small ? tg.rest_dim : tg.keep_dim;
            sc.psi.assign(static_cast<size_t>(side) * other, 0.0);
            for (long n = 0; n < non_r_dim; ++n) {
                const cplx* pr = sc.post.data() + n * out_dim;
                const long kb = tg.keep_of_n[n] * dim_v;
                const long rb = tg.rest_of_n[n] * dim_e;
                for (long v = 0; v < dim_v; ++v)
                    for (long e = 0; e < dim_e; ++e) {
                        const long ki = kb + v, ri = rb + e;
                        const long s = keep_small ? ki : ri;
                        const long o = keep_small ? ri : ki;
                        sc.psi[s * other + o] = pr[v * dim_e + e];
                    }
            }
            if (sc.gram.n != static_cast<int>(side)) sc.gram = CMat(static_cast<int>(side));
            for (long a = 0; a < side; ++a) {
                const cplx* pa = sc.psi.data() + a * other;
                for (long b = 0; b <= a; ++b) {
                    const cplx* pb = sc.psi.data() + b * other;
                    cplx acc = 0.0;
                    for (long o = 0; o < other; ++o) acc += pa[o] * std::conj(pb[o]);
                    sc.gram.a[a * side + b] = acc;
                    sc.gram.a[b * side + a] = std::conj(acc);
                }
            }
            const auto w = hermitian_eigenvalues_fast(sc.gram);
            double h = 0.0;
            for (double p : w)
                if (p > 1e-15) h -= p * std::log2(p);
            value += t == 0 ? h : -h;
        }
        return value;
    }

    cvec materialize(const std::vector<double>& params) const {
        cvec w(out_dim * r_dim);
        const size_t half = w.size();
        for (size_t k = 0; k < half; ++k) w[k] = cplx(params[k], params[half + k]);
        orthonormalize_columns(w, static_cast<int>(out_dim), static_cast<int>(r_dim));
        return w;
    }
};

}  // namespace

ConverseResult optimize_converse(const LabeledPureState& s, const OptimizeConfig& cfg) {
    s.validate();
    const auto& r_labels = s.layout.role_labels(Role::R);
    const int k = static_cast<int>(r_labels.size());
    if (k > 12)
        throw std::invalid_argument("split enumeration capped at 12 R factors, got " +
                                    std::to_string(k));
    if (cfg.restarts < 0 || cfg.max_iters < 0 || cfg.step_tol <= 0)
        throw std::invalid_argument("invalid optimizer configuration");

    ConverseResult res;
    res.seed = cfg.seed;
    res.restarts = cfg.restarts;
    res.value = -std::numeric_limits<double>::infinity();
    res.best_split = -std::numeric_limits<double>::infinity();

    // All 2^k subset channels, subset bits indexing R factors in order.
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<std::string> v;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) v.push_back(r_labels[i]);
        ChannelSpec c = ChannelSpec::split(v);
        const double val = converse_value(s, c);
        res.per_candidate.push_back({c.summary(), val});
        if (val > res.best_split) res.best_split = val;
        if (val > res.value) {
            res.value = val;
            res.best_channel = c;
            res.best_label = c.summary();
        }
    }

    if (!cfg.splits_only && cfg.restarts > 0) {
        res.continuous_ran = true;
        res.best_continuous = -std::numeric_limits<double>::infinity();
        const long r_dim = r_dimension(s.layout);
        const int dv = cfg.dim_v > 0 ? cfg.dim_v : static_cast<int>(r_dim);
        const int de = cfg.dim_e > 0 ? cfg.dim_e : static_cast<int>(r_dim);
        if (static_cast<long>(dv) * de < r_dim)
            throw std::invalid_argument("dim_v*dim_e must be at least dim R");
        const IsometryObjective obj(s, dv, de);
        const size_t nparams = 2 * static_cast<size_t>(obj.out_dim) * r_dim;

        for (int restart = 0; restart < cfg.restarts; ++restart) {
            std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * (restart + 1));
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::vector<double> p(nparams);
            for (auto& x : p) x = gauss(rng);

            IsometryObjective::Scratch sc;
            double f = obj.eval(p, sc);
            double last_step = 1.0;
            double window_base = f;
            int window_start = 0;
            std::vector<double> grad(nparams), trial(nparams);
            int iter = 0;
            for (; iter < cfg.max_iters; ++iter) {
                double pmax = 1.0;
                for (double x : p) pmax = std::max(pmax, std::abs(x));
                const double h = 1e-4 * pmax;
                double gnorm2 = 0.0;
#pragma omp parallel reduction(+ : gnorm2)
                {
                    std::vector<double> lp = p;  // per-thread probe buffer
                    IsometryObjective::Scratch lsc;
#pragma omp for schedule(static)
                    for (long i = 0; i < static_cast<long>(nparams); ++i) {
                        lp[i] = p[i] + h;
                        const double fp = obj.eval(lp, lsc);
                        lp[i] = p[i] - h;
                        const double fm = obj.eval(lp, lsc);
                        lp[i] = p[i];
                        grad[i] = (fp - fm) / (2.0 * h);
                        gnorm2 += grad[i] * grad[i];
                    }
                }
                const double gnorm = std::sqrt(gnorm2);
                if (gnorm < 1e-12) break;

                double step = 2.0 * last_step;
                bool improved = false;
                for (int ls = 0; ls < 30; ++ls) {
                    for (size_t i = 0; i < nparams; ++i) trial[i] = p[i] + step * grad[i] / gnorm;
                    const double ft = obj.eval(trial, sc);
                    if (ft > f + 1e-12) {
                        p.swap(trial);
                        f = ft;
                        last_step = step;
                        improved = true;
                        break;
                    }
                    step *= 0.5;
                }
                if (!improved) break;
                // Stall detection: best improvement below step_tol over 20 iterations.
                if (iter - window_start >= 20) {
                    if (f - window_base < cfg.step_tol) break;
                    window_base = f;
                    window_start = iter;
                }
            }
            res.iterations += iter;
            // Cross-check the indexed fast path against the label-based
            // evaluation once per restart.
            const ChannelSpec cand = ChannelSpec::isometry(dv, de, obj.materialize(p));
            const double check = converse_value(s, cand);
            if (std::abs(check - f) > 1e-8)
                throw NumericalError("optimize_converse: fast objective " + std::to_string(f) +
                                     " disagrees with reference value " + std::to_string(check));
            res.per_candidate.push_back({"isometry{restart=" + std::to_string(restart) + "}", f});
            if (f > res.best_continuous) res.best_continuous = f;
            if (f > res.value) {
                res.value = f;
                res.best_channel = cand;
                res.best_label = "isometry{restart=" + std::to_string(restart) + "}";
            }
        }
    }
    return res;
}

Cor3iiCertificate certify_cor3ii(const LabeledPureState& s, const ChannelSpec& c, double tol) {
    if (tol < 0) throw std::invalid_argument("certify_cor3ii: tol must be >= 0");
    const PostChannelState post = apply_channel(s, c);
    auto with = [&](std::vector<std::string> base, const std::vector<std::string>& extra) {
        base.insert(base.end(), extra.begin(), extra.end());
        return base;
    };
    const auto& V = post.v_labels;
    const auto& E = post.e_labels;

    Cor3iiCertificate cert;
    cert.qcmi_values[0] = V.empty() ? 0.0 : qcmi(post.state, {"C_B"}, V, {"A"});
    cert.qcmi_values[1] = E.empty() ? 0.0 : qcmi(post.state, {"C_A"}, E, with({"A"}, V));
    cert.qcmi_values[2] = E.empty() ? 0.0 : qcmi(post.state, {"C_A"}, E, {"B"});
    cert.qcmi_values[3] = V.empty() ? 0.0 : qcmi(post.state, {"C_B"}, V, with({"B"}, E));
    cert.certified_u1 = cert.qcmi_values[0] <= tol && cert.qcmi_values[1] <= tol;
    cert.certified_u2 = cert.qcmi_values[2] <= tol && cert.qcmi_values[3] <= tol;

    if (cert.certified_u1 || cert.certified_u2) {
        const auto [u1, u2] = upper_bounds(s);
        cert.exact_cost = cert.certified_u1 ? u1 : u2;
        cert.certificate = cert.certified_u1 ? "Cor3ii_u1" : "Cor3ii_u2";
        const double cv = objective_on(post);
        if (std::abs(cert.exact_cost - cv) > 1e-6)
            throw NumericalError("Cor3ii certificate inconsistent: u=" +
                                 std::to_string(cert.exact_cost) + " vs channel value " +
                                 std::to_string(cv));
    }
    return cert;
}

}  // namespace sxq
