#include "siglap/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace siglap {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::vector<double> random_unit(int n, std::mt19937_64& gen) {
    std::vector<double> x(static_cast<size_t>(n));
    for (auto& xi : x) xi = 2.0 * uniform01(gen) - 1.0;
    double nm = norm2(x);
    if (nm == 0.0) { x[0] = 1.0; nm = 1.0; }
    for (auto& xi : x) xi /= nm;
    return x;
}

// Householder unit vector w such that (I - 2 w w^T) maps v onto the first
// coordinate axis.
std::vector<double> householder_vector(const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    if (n < 2) throw std::invalid_argument("complement basis needs dimension >= 2");
    double nv = norm2(v);
    if (nv == 0.0) throw std::invalid_argument("cannot deflate the zero vector");
    std::vector<double> w = v;
    w[0] += (v[0] >= 0.0 ? nv : -nv);
    double nw = norm2(w);
    for (auto& wi : w) wi /= nw;
    return w;
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* brow = b.row(k);
            double* crow = c.row(i);
            for (int j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

SymmetricMatrix SymmetricMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i))
                throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
    SymmetricMatrix s(m.rows());
    s.a_ = m;
    return s;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) s += a_(i, j) * a_(i, j);
    return std::sqrt(s);
}

double SymmetricMatrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < dim(); ++i) {
        double s = 0.0;
        for (int j = 0; j < dim(); ++j) s += std::fabs(a_(i, j));
        best = std::max(best, s);
    }
    return best;
}

std::vector<double> SpectrumSummary::eigenvector(int k) const {
    std::vector<double> v(static_cast<size_t>(eigenvectors.rows()));
    for (int i = 0; i < eigenvectors.rows(); ++i) v[static_cast<size_t>(i)] = eigenvectors(i, k);
    return v;
}

std::vector<double> SpectrumSummary::eigenvalues_abs_order() const {
    std::vector<double> v;
    v.reserve(abs_order.size());
    for (int k : abs_order) v.push_back(eigenvalues[static_cast<size_t>(k)]);
    return v;
}

SpectrumSummary eigendecompose(const SymmetricMatrix& m) {
    const int n = m.dim();
    if (n == 0) throw std::invalid_argument("cannot decompose an empty matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!std::isfinite(m(i, j)))
                throw std::invalid_argument("matrix has a non-finite entry at (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");

    Matrix a = m.as_matrix();
    Matrix v(n, n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    const double norm = m.frobenius_norm();
    const double off_target = kJacobiOffTol * norm;

    auto off_mass = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return std::sqrt(2.0 * s);
    };

    bool converged = false;
    double off = 0.0;
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        off = off_mass();
        if (off <= off_target) { converged = true; break; }
        // elements below off_target/n cannot keep the total mass above target
        const double skip = off_target / std::max(1, n);
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= skip) continue;

                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;

                a(p, p) -= h;
                a(q, q) += h;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = arp - s * (arq + tau * arp);
                    a(p, r) = a(r, p);
                    a(r, q) = arq + s * (arp - tau * arq);
                    a(q, r) = a(r, q);
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (!converged && off_mass() > off_target)
        throw std::runtime_error("jacobi eigensolver did not converge in " +
                                 std::to_string(kJacobiMaxSweeps) +
                                 " sweeps; off-diagonal residual " + std::to_string(off_mass() / (norm > 0 ? norm : 1.0)));

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

    SpectrumSummary out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[static_cast<size_t>(k)] = a(perm[static_cast<size_t>(k)], perm[static_cast<size_t>(k)]);
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, perm[static_cast<size_t>(k)]);
    }
    out.abs_order.resize(static_cast<size_t>(n));
    std::iota(out.abs_order.begin(), out.abs_order.end(), 0);
    std::stable_sort(out.abs_order.begin(), out.abs_order.end(), [&](int x, int y) {
        const double ax = std::fabs(out.eigenvalues[static_cast<size_t>(x)]);
        const double ay = std::fabs(out.eigenvalues[static_cast<size_t>(y)]);
        if (ax != ay) return ax < ay;
        return out.eigenvalues[static_cast<size_t>(x)] < out.eigenvalues[static_cast<size_t>(y)];
    });
    return out;
}

Matrix complement_basis(const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    const std::vector<double> w = householder_vector(v);
    Matrix b(n, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n - 1; ++j)
            b(i, j) = (i == j + 1 ? 1.0 : 0.0) - 2.0 * w[static_cast<size_t>(i)] * w[static_cast<size_t>(j + 1)];
    return b;
}

Matrix deflate_all_ones_basis(int n) {
    return complement_basis(std::vector<double>(static_cast<size_t>(n), 1.0));
}

SymmetricMatrix restrict_to_complement(const SymmetricMatrix& m, const std::vector<double>& v) {
    const int n = m.dim();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("deflation vector dimension mismatch");
    const std::vector<double> w = householder_vector(v);

    // P m P with P = I - 2 w w^T, assembled from m w and w^T m w
    std::vector<double> a(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += m(i, j) * w[static_cast<size_t>(j)];
        a[static_cast<size_t>(i)] = s;
    }
    const double sww = dot(w, a);

    SymmetricMatrix h(n - 1);
    for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double wi = w[static_cast<size_t>(i)];
            const double wj = w[static_cast<size_t>(j)];
            const double t = m(i, j) - 2.0 * wi * a[static_cast<size_t>(j)] -
                             2.0 * a[static_cast<size_t>(i)] * wj + 4.0 * sww * wi * wj;
            h.set(i - 1, j - 1, t);
        }
    }
    return h;
}

std::vector<double> lift_from_complement(const std::vector<double>& y, const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    if (static_cast<int>(y.size()) != n - 1)
        throw std::invalid_argument("complement coordinate dimension mismatch");
    const std::vector<double> w = householder_vector(v);
    double t = 0.0;
    for (int i = 1; i < n; ++i) t += w[static_cast<size_t>(i)] * y[static_cast<size_t>(i - 1)];
    std::vector<double> x(static_cast<size_t>(n));
    x[0] = -2.0 * w[0] * t;
    for (int i = 1; i < n; ++i)
        x[static_cast<size_t>(i)] = y[static_cast<size_t>(i - 1)] - 2.0 * w[static_cast<size_t>(i)] * t;
    return x;
}

RayleighMax max_rayleigh_orthogonal_to(const SymmetricMatrix& m, const std::vector<double>& excluded,
                                       std::uint64_t seed) {
    const int n = m.dim();
    if (static_cast<int>(excluded.size()) != n)
        throw std::invalid_argument("excluded vector dimension mismatch");
    if (norm2(excluded) == 0.0) throw std::invalid_argument("excluded vector must be nonzero");
    if (n < 2) throw std::invalid_argument("orthogonal complement is trivial for dimension < 2");

    if (n <= kDensePathMaxDim) {
        SymmetricMatrix h = restrict_to_complement(m, excluded);
        SpectrumSummary spec = eigendecompose(h);
        const int last = h.dim() - 1;
        RayleighMax out;
        out.value = spec.eigenvalues[static_cast<size_t>(last)];
        out.argmax = lift_from_complement(spec.eigenvector(last), excluded);
        // clean residual component along the excluded direction
        std::vector<double> u = excluded;
        double nu = norm2(u);
        for (auto& ui : u) ui /= nu;
        double proj = dot(out.argmax, u);
        for (size_t i = 0; i < out.argmax.size(); ++i) out.argmax[i] -= proj * u[i];
        double nx = norm2(out.argmax);
        for (auto& xi : out.argmax) xi /= nx;
        return out;
    }

    LinearOp op = [&m, n](const double* x, double* y) {
        for (int i = 0; i < n; ++i) {
            const double* row = m.as_matrix().row(i);
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += row[j] * x[j];
            y[i] = s;
        }
    };
    return max_rayleigh_power(op, n, excluded, m.inf_norm(), seed);
}

RayleighMax max_rayleigh_power(const LinearOp& op, int dim, const std::vector<double>& excluded,
                               double shift, std::uint64_t seed) {
    const bool project = !excluded.empty();
    if (project && static_cast<int>(excluded.size()) != dim)
        throw std::invalid_argument("excluded vector dimension mismatch");
    std::vector<double> u = excluded;
    if (project) {
        const double nu = norm2(u);
        if (nu == 0.0) throw std::invalid_argument("excluded vector must be nonzero");
        for (auto& ui : u) ui /= nu;
    }

    const long cap = 100L * std::max(dim, 10);
    double last_residual = 0.0;

    for (int attempt = 0; attempt < 2; ++attempt) {
        std::mt19937_64 gen(seed + static_cast<std::uint64_t>(attempt));
        std::vector<double> x;
        double nx = 0.0;
        do {
            x = random_unit(dim, gen);
            if (project) {
                const double proj = dot(x, u);
                for (int i = 0; i < dim; ++i) x[static_cast<size_t>(i)] -= proj * u[static_cast<size_t>(i)];
            }
            nx = norm2(x);
        } while (nx < 1e-8);
        for (auto& xi : x) xi /= nx;

        std::vector<double> y(static_cast<size_t>(dim));
        double prev = std::numeric_limits<double>::quiet_NaN();
        int consec = 0;
        for (long it = 0; it < cap; ++it) {
            op(x.data(), y.data());
            if (project) {
                const double proj = dot(y, u);
                for (int i = 0; i < dim; ++i) y[static_cast<size_t>(i)] -= proj * u[static_cast<size_t>(i)];
            }
            for (int i = 0; i < dim; ++i) y[static_cast<size_t>(i)] += shift * x[static_cast<size_t>(i)];
            const double val = dot(x, y);

            double rr = 0.0;
            for (int i = 0; i < dim; ++i) {
                const double d = y[static_cast<size_t>(i)] - val * x[static_cast<size_t>(i)];
                rr += d * d;
            }
            last_residual = std::sqrt(rr) / std::max(1.0, std::fabs(val));

            const double ny = norm2(y);
            if (ny == 0.0) break;  // operator annihilated x; restart
            for (int i = 0; i < dim; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / ny;
            if (project) {
                const double drift = dot(x, u);
                if (std::fabs(drift) > 1e-15) {
                    for (int i = 0; i < dim; ++i) x[static_cast<size_t>(i)] -= drift * u[static_cast<size_t>(i)];
                    const double nx2 = norm2(x);
                    for (auto& xi : x) xi /= nx2;
                }
            }

            if (!std::isnan(prev) && std::fabs(val - prev) <= kPowerRelTol * std::max(1.0, std::fabs(val))) {
                if (++consec >= 3) return RayleighMax{val - shift, x};
            } else {
                consec = 0;
            }
            prev = val;
        }
    }
    throw std::runtime_error("power iteration did not converge; last residual " +
                             std::to_string(last_residual));
}

namespace {

// Dense Cholesky, lower triangular. Returns false if a pivot is not safely
// positive (matrix not numerically positive definite).
bool cholesky(const SymmetricMatrix& h, Matrix& l) {
    const int n = h.dim();
    l = Matrix(n, n);
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::fabs(h(i, i)));
    const double pivot_floor = 1e-14 * std::max(max_diag, 1e-300);
    for (int j = 0; j < n; ++j) {
        double d = h(j, j);
        for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (d <= pivot_floor) return false;
        l(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = h(i, j);
            const double* lrow_i = l.row(i);
            const double* lrow_j = l.row(j);
            for (int k = 0; k < j; ++k) s -= lrow_i[k] * lrow_j[k];
            l(i, j) = s / l(j, j);
        }
    }
    return true;
}

void chol_solve(const Matrix& l, const std::vector<double>& b, std::vector<double>& x) {
    const int n = l.rows();
    std::vector<double> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = b[static_cast<size_t>(i)];
        const double* lrow = l.row(i);
        for (int k = 0; k < i; ++k) s -= lrow[k] * z[static_cast<size_t>(k)];
        z[static_cast<size_t>(i)] = s / lrow[i];
    }
    x.assign(static_cast<size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = z[static_cast<size_t>(i)];
        for (int k = i + 1; k < n; ++k) s -= l(k, i) * x[static_cast<size_t>(k)];
        x[static_cast<size_t>(i)] = s / l(i, i);
    }
}

// Shift-invert Lanczos for the smallest eigenvalue of a positive definite
// matrix, with full reorthogonalization.
double smallest_eig_spd_lanczos(const SymmetricMatrix& h, const Matrix& l, std::uint64_t seed) {
    const int n = h.dim();
    const int maxk = std::min(n, 220);
    std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);

    std::vector<std::vector<double>> basis;
    std::vector<double> alphas, betas;
    std::vector<double> v = random_unit(n, gen);
    std::vector<double> v_prev(static_cast<size_t>(n), 0.0);
    std::vector<double> w;
    double beta_prev = 0.0;
    double theta = 0.0;
    basis.push_back(v);

    for (int k = 1; k <= maxk; ++k) {
        chol_solve(l, v, w);
        const double alpha = dot(w, v);
        for (int i = 0; i < n; ++i)
            w[static_cast<size_t>(i)] -= alpha * v[static_cast<size_t>(i)] + beta_prev * v_prev[static_cast<size_t>(i)];
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                const double c = dot(w, b);
                if (c == 0.0) continue;
                for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] -= c * b[static_cast<size_t>(i)];
            }
        }
        alphas.push_back(alpha);
        const double beta = norm2(w);

        const bool check = (beta <= 1e-14 * std::fabs(alpha)) || k == maxk || (k >= 8 && k % 4 == 0);
        if (check) {
            SymmetricMatrix t(k);
            for (int i = 0; i < k; ++i) {
                t.set(i, i, alphas[static_cast<size_t>(i)]);
                if (i + 1 < k) t.set(i, i + 1, betas[static_cast<size_t>(i)]);
            }
            SpectrumSummary ts = eigendecompose(t);
            theta = ts.eigenvalues.back();
            const double bottom = std::fabs(ts.eigenvectors(k - 1, k - 1));
            const double resid = beta * bottom;
            if (resid <= 1e-13 * std::max(theta, 1.0) || beta <= 1e-14 * std::fabs(alpha)) break;
        }
        if (k == maxk) break;

        betas.push_back(beta);
        v_prev = v;
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] / beta;
        basis.push_back(v);
        beta_prev = beta;
    }
    if (theta <= 0.0) throw std::runtime_error("lanczos failed to find a positive extremal value");
    return 1.0 / theta;
}

}  // namespace

double min_eig_on_complement(const SymmetricMatrix& m, const std::vector<double>& v, std::uint64_t seed) {
    SymmetricMatrix h = restrict_to_complement(m, v);
    const int k = h.dim();
    if (k <= 128) return eigendecompose(h).eigenvalues.front();

    Matrix l;
    if (!cholesky(h, l)) return eigendecompose(h).eigenvalues.front();
    return smallest_eig_spd_lanczos(h, l, seed);
}

}  // namespace siglap
