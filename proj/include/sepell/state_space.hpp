#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace sepell {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-9;

/// Bipartite density operator: Hermitian, PSD, unit-trace matrix of
/// dimension dim_a * dim_b. Construction does not enforce the state
/// invariants; call validate_density_operator where they are required.
struct DensityOperator {
    int dim_a = 0;
    int dim_b = 0;
    CMat matrix;

    int dim() const { return dim_a * dim_b; }
};

/// Ordered trace-free self-adjoint basis with Tr(s_i s_j) = alpha * delta_ij.
/// gamma = sqrt(N(N-1)/alpha) normalizes Bloch vectors of pure states to 1.
struct HermitianBasis {
    int dim = 0;
    std::vector<CMat> matrices;
    double alpha = 0.0;
    double gamma = 0.0;
};

/// Real coordinates of a density operator in a HermitianBasis; length N^2 - 1.
struct BlochVector {
    int dim = 0;
    RVec components;
};

/// Generalized Gell-Mann basis of dimension dim >= 2: symmetric off-diagonal
/// pairs in row-major pair order, then antisymmetric pairs, then diagonal
/// matrices by increasing rank. alpha = 2.
HermitianBasis gell_mann_basis(int dim);

/// r_i = (N / (gamma * alpha)) Tr(s_i rho).
BlochVector vectorize(const DensityOperator &rho, const HermitianBasis &basis);

/// (1/N)(I + gamma * sum_i r_i s_i). Hermitian and unit trace by
/// construction; PSD is not guaranteed and must be checked by the caller.
DensityOperator devectorize(const BlochVector &r, const HermitianBasis &basis, int dim_a = 0,
                            int dim_b = 0);

/// Transpose of the subsystem-A indices: ((i,j),(k,l)) -> ((k,j),(i,l)).
CMat partial_transpose(const CMat &m, int dim_a, int dim_b);
CMat partial_transpose(const DensityOperator &rho);

double hermiticity_error(const CMat &m);
double min_eigenvalue(const CMat &m);

/// True iff the minimum eigenvalue of m is >= -tol. Throws if m is not
/// Hermitian within tol.
bool is_psd(const CMat &m, double tol);

/// Checks Hermiticity (1e-12), unit trace (1e-12) and PSD (-1e-9);
/// throws std::invalid_argument on violation.
void validate_density_operator(const DensityOperator &rho);

} // namespace sepell
