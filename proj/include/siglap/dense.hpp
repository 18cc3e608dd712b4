#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace siglap {

// Tolerances shared across the numerical layer.
inline constexpr double kEigTol = 1e-10;        // eigensolver acceptance tolerance
inline constexpr double kProjTol = 1e-12;       // orthogonality assertions
inline constexpr double kJacobiOffTol = 1e-14;  // off-diagonal mass target, relative
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr int kDensePathMaxDim = 800;    // above this, Rayleigh maximization switches to power iteration
inline constexpr double kPowerRelTol = 1e-10;

// Dense row-major rectangular matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double* row(int i) { return a_.data() + static_cast<size_t>(i) * cols_; }
    const double* row(int i) const { return a_.data() + static_cast<size_t>(i) * cols_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

// Dense symmetric matrix; symmetry is exact by construction (set writes both
// triangles).
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n) : a_(n, n) {}

    // Validates m(i,j) == m(j,i) exactly; throws std::invalid_argument otherwise.
    static SymmetricMatrix from_matrix(const Matrix& m);

    int dim() const { return a_.rows(); }
    double operator()(int i, int j) const { return a_(i, j); }
    void set(int i, int j, double v) {
        a_(i, j) = v;
        a_(j, i) = v;
    }
    void add(int i, int j, double v) {
        a_(i, j) += v;
        if (i != j) a_(j, i) = a_(i, j);
    }

    const Matrix& as_matrix() const { return a_; }
    double frobenius_norm() const;
    double inf_norm() const;  // max absolute row sum

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    Matrix a_;
};

// Full spectrum of a symmetric matrix. Eigenvalues are sorted ascending by
// value; column k of `eigenvectors` is the unit eigenvector for
// eigenvalues[k]. `abs_order` is the permutation giving ascending
// absolute-value order, ties broken by ascending signed value.
struct SpectrumSummary {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
    std::vector<int> abs_order;

    std::vector<double> eigenvector(int k) const;
    std::vector<double> eigenvalues_abs_order() const;
};

// Cyclic Jacobi with threshold: sweeps until the off-diagonal Frobenius mass
// drops below kJacobiOffTol * ||M||_F, capped at kJacobiMaxSweeps sweeps.
// Deterministic for identical input. Throws std::invalid_argument on
// non-finite entries and std::runtime_error (reporting the residual) if the
// cap is hit.
SpectrumSummary eigendecompose(const SymmetricMatrix& m);

struct RayleighMax {
    double value = 0.0;
    std::vector<double> argmax;
};

// max over x ⊥ excluded of <x, m x>/||x||^2. Dense dimensions up to
// kDensePathMaxDim solve the deflated restriction exactly; larger problems
// use shifted power iteration.
RayleighMax max_rayleigh_orthogonal_to(const SymmetricMatrix& m, const std::vector<double>& excluded,
                                       std::uint64_t seed = 0);

// y = op(x) for a symmetric linear operator given only by its action.
using LinearOp = std::function<void(const double* x, double* y)>;

// Power iteration for the largest eigenvalue of the operator restricted to
// the orthogonal complement of `excluded` (pass an empty vector for the
// unrestricted problem). `shift` must make the operator positive definite on
// that complement (pass the infinity norm). Re-projects every step; relative
// tolerance kPowerRelTol, iteration cap 100 * dim, one restart with a fresh
// start vector on stagnation.
RayleighMax max_rayleigh_power(const LinearOp& op, int dim, const std::vector<double>& excluded,
                               double shift, std::uint64_t seed);

// Orthonormal basis of the complement of v: the trailing n-1 columns of the
// Householder reflector mapping v to the first coordinate axis. Deterministic.
Matrix complement_basis(const std::vector<double>& v);
Matrix deflate_all_ones_basis(int n);

// B^T m B for the complement basis B of v, computed in O(n^2) via the
// reflector. This is the restriction of m to v-perp.
SymmetricMatrix restrict_to_complement(const SymmetricMatrix& m, const std::vector<double>& v);

// Maps coordinates y in the complement basis back to the ambient space (B y).
std::vector<double> lift_from_complement(const std::vector<double>& y, const std::vector<double>& v);

// Smallest eigenvalue of the restriction of m to the complement of v.
// Small dimensions go through the dense solver; large ones use shift-invert
// Lanczos (valid when the restriction is positive semi-definite, as for
// graph Laplacians).
double min_eig_on_complement(const SymmetricMatrix& m, const std::vector<double>& v,
                             std::uint64_t seed = 0);

}  // namespace siglap
