#include "sxq/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace sxq {

CMat CMat::identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

double max_abs_diff(const CMat& x, const CMat& y) {
    double d = 0.0;
    for (size_t k = 0; k < x.a.size(); ++k) d = std::max(d, std::abs(x.a[k] - y.a[k]));
    return d;
}

double hermiticity_defect(const CMat& m) {
    double d = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i; j < m.n; ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

namespace {

double offdiag_norm(const CMat& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) s += std::norm(m(i, j));
    return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const CMat& m, CMat* vecs, double residual_tol) {
    const int n = m.n;
    CMat a = m;
    // Work on the Hermitian part so tiny asymmetric noise cannot bias rotations.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    CMat v = CMat::identity(n);

    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
    scale = std::max(scale, offdiag_norm(a));
    const double stop = std::max(1e-300, 1e-15 * std::max(1.0, scale));

    const int max_sweeps = 100 * std::max(1, n);
    // Rotations on entries already below this leave the offdiagonal norm under
    // `stop`; skipping them makes the late quadratic-convergence sweeps cheap.
    const double skip = stop / (2.0 * n);
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= skip) continue;
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // 2x2 Hermitian rotation zeroing a(p,q), tangent form (no
                // trig calls): t = sign(d)/(|d| + sqrt(d^2 + 1)), d = cot(2theta).
                const double d = (app - aqq) / (2.0 * mag);
                const double t = (d >= 0 ? 1.0 : -1.0) / (std::abs(d) + std::sqrt(d * d + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const cplx s = (t * c) * phase;
                // Columns: [col_p, col_q] <- [c*col_p + conj(s)*col_q, -s*col_p + c*col_q]
                for (int i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + std::conj(s) * aiq;
                    a(i, q) = -s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + s * aqj;
                    a(q, j) = -std::conj(s) * apj + c * aqj;
                }
                if (!vecs) continue;
                for (int i = 0; i < n; ++i) {
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + std::conj(s) * viq;
                    v(i, q) = -s * vip + c * viq;
                }
            }
        }
    }
    if (offdiag_norm(a) > std::max(stop, 1e-10 * std::max(1.0, scale)))
        throw NumericalError("jacobi_eigenvalues: no convergence after " +
                             std::to_string(max_sweeps) + " sweeps, dim " + std::to_string(n) +
                             ", offdiag " + std::to_string(offdiag_norm(a)));

    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = a(i, i).real();

    if (vecs) {
        // Residual check against the Hermitian part of the input.
        CMat recon(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx s = 0.0;
                for (int k = 0; k < n; ++k) s += v(i, k) * w[k] * std::conj(v(j, k));
                recon(i, j) = s;
            }
        CMat herm(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) herm(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        const double resid = max_abs_diff(recon, herm);
        if (resid > residual_tol)
            throw NumericalError("jacobi_eigenvalues: residual " + std::to_string(resid) +
                                 " exceeds tolerance, dim " + std::to_string(n));
    } else {
        // Without the accumulated basis the reconstruction residual equals the
        // final offdiagonal content (rotations are unitary to roundoff).
        const double resid = offdiag_norm(a);
        if (resid > residual_tol)
            throw NumericalError("jacobi_eigenvalues: residual " + std::to_string(resid) +
                                 " exceeds tolerance, dim " + std::to_string(n));
    }

    // Sort ascending; reorder eigenvector columns to match.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return w[x] < w[y]; });
    std::vector<double> ws(n);
    for (int k = 0; k < n; ++k) ws[k] = w[order[k]];
    if (vecs) {
        CMat vs(n);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) vs(i, k) = v(i, order[k]);
        *vecs = std::move(vs);
    }
    return ws;
}

void orthonormalize_columns(cvec& m, int rows, int cols) {
    auto at = [&](int i, int j) -> cplx& { return m[static_cast<size_t>(i) * cols + j]; };
    for (int j = 0; j < cols; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx dot = 0.0;
            for (int i = 0; i < rows; ++i) dot += std::conj(at(i, k)) * at(i, j);
            for (int i = 0; i < rows; ++i) at(i, j) -= dot * at(i, k);
        }
        double nrm = 0.0;
        for (int i = 0; i < rows; ++i) nrm += std::norm(at(i, j));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12)
            throw NumericalError("orthonormalize_columns: rank-deficient column " +
                                 std::to_string(j));
        for (int i = 0; i < rows; ++i) at(i, j) /= nrm;
    }
}

namespace {

// Implicit-shift QL eigenvalues of a real symmetric tridiagonal matrix with
// diagonal d[0..n-1] and subdiagonal e[1..n-1]; results land in d unsorted.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, int n) {
    if (n <= 1) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m == l) break;
            if (++iter > 50)
                throw NumericalError("hermitian_eigenvalues_fast: QL iteration limit");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
            double s = 1.0, c = 1.0, p = 0.0;
            int i = m - 1;
            for (; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

}  // namespace

std::vector<double> hermitian_eigenvalues_fast(CMat& m) {
    const int n = m.n;
    std::vector<double> d(n), e(n, 0.0);
    if (n == 1) {
        d[0] = m(0, 0).real();
        return d;
    }

    // Householder reduction to Hermitian tridiagonal form, trailing column
    // first. Complex subdiagonals are collapsed to their magnitudes at the
    // end (a diagonal unitary similarity), leaving a real tridiagonal.
    cvec esub(n, 0.0);
    cvec v(n), p(n);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i;  // eliminate m(i, 0..i-2), keep m(i, i-1)
        double sigma2 = 0.0;
        for (int k = 0; k < l - 1; ++k) sigma2 += std::norm(m(i, k));
        const cplx mil = m(i, l - 1);
        if (sigma2 <= 0.0) {
            esub[i] = mil;
            continue;
        }
        const double sigma = std::sqrt(sigma2 + std::norm(mil));
        const double milm = std::abs(mil);
        const cplx alpha = milm > 0.0 ? cplx(-sigma) * (mil / milm) : cplx(-sigma);
        // Householder vector v = row_i - alpha * e_{l-1} over the leading l entries.
        double vnorm2 = 0.0;
        for (int k = 0; k < l; ++k) {
            v[k] = std::conj(m(i, k));
            if (k == l - 1) v[k] -= std::conj(alpha);
            vnorm2 += std::norm(v[k]);
        }
        esub[i] = alpha;
        if (vnorm2 <= 0.0) continue;
        const double beta = 2.0 / vnorm2;
        // Two-sided update of the leading l x l block: A -= v q^dag + q v^dag,
        // q = beta*A v - (beta^2/2)(v^dag A v) v.
        cplx vav = 0.0;
        for (int r = 0; r < l; ++r) {
            cplx acc = 0.0;
            for (int c = 0; c < l; ++c) acc += m(r, c) * v[c];
            p[r] = beta * acc;
            vav += std::conj(v[r]) * p[r];
        }
        const cplx kappa = 0.5 * beta * vav;
        for (int r = 0; r < l; ++r) p[r] -= kappa * v[r];
        for (int r = 0; r < l; ++r)
            for (int c = 0; c < l; ++c)
                m(r, c) -= v[r] * std::conj(p[c]) + p[r] * std::conj(v[c]);
    }
    for (int i = 0; i < n; ++i) d[i] = m(i, i).real();
    for (int i = 1; i < n; ++i) e[i] = std::abs(esub[i]);

    tridiag_ql(d, e, n);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace sxq
