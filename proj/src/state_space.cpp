#include "sepell/state_space.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sepell {

namespace {

CMat unit_matrix(int dim, int row, int col)
{
    CMat m = CMat::Zero(dim, dim);
    m(row, col) = Complex(1.0, 0.0);
    return m;
}

} // namespace

HermitianBasis gell_mann_basis(int dim)
{
    if (dim < 2) {
        throw std::invalid_argument("gell_mann_basis: dimension must be >= 2");
    }

    HermitianBasis basis;
    basis.dim = dim;
    basis.alpha = 2.0;
    basis.gamma = std::sqrt(dim * (dim - 1.0) / basis.alpha);
    basis.matrices.reserve(static_cast<std::size_t>(dim) * dim - 1);

    // Symmetric off-diagonal pairs, row-major pair order.
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            basis.matrices.push_back(unit_matrix(dim, j, k) + unit_matrix(dim, k, j));
        }
    }
    // Antisymmetric pairs.
    const Complex i_unit(0.0, 1.0);
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            basis.matrices.push_back(-i_unit * unit_matrix(dim, j, k) +
                                     i_unit * unit_matrix(dim, k, j));
        }
    }
    // Diagonal matrices by increasing rank: sqrt(2/(l(l+1))) * diag(1,...,1,-l,0,...).
    for (int l = 1; l < dim; ++l) {
        CMat d = CMat::Zero(dim, dim);
        for (int j = 0; j < l; ++j) {
            d(j, j) = Complex(1.0, 0.0);
        }
        d(l, l) = Complex(-static_cast<double>(l), 0.0);
        basis.matrices.push_back(std::sqrt(2.0 / (l * (l + 1.0))) * d);
    }
    return basis;
}

BlochVector vectorize(const DensityOperator &rho, const HermitianBasis &basis)
{
    const int n = rho.dim();
    if (n != basis.dim) {
        std::ostringstream msg;
        msg << "vectorize: operator dimension " << n << " does not match basis dimension "
            << basis.dim;
        throw std::invalid_argument(msg.str());
    }
    const double scale = n / (basis.gamma * basis.alpha);
    BlochVector r;
    r.dim = n;
    r.components.resize(static_cast<Eigen::Index>(n) * n - 1);
    for (Eigen::Index i = 0; i < r.components.size(); ++i) {
        r.components[i] =
            scale * (basis.matrices[static_cast<std::size_t>(i)] * rho.matrix).trace().real();
    }
    return r;
}

DensityOperator devectorize(const BlochVector &r, const HermitianBasis &basis, int dim_a,
                            int dim_b)
{
    const int n = basis.dim;
    if (r.components.size() != static_cast<Eigen::Index>(n) * n - 1) {
        throw std::invalid_argument("devectorize: component count does not match basis");
    }
    CMat m = CMat::Identity(n, n);
    for (Eigen::Index i = 0; i < r.components.size(); ++i) {
        m += basis.gamma * r.components[i] * basis.matrices[static_cast<std::size_t>(i)];
    }
    DensityOperator rho;
    if (dim_a > 0 && dim_b > 0) {
        if (dim_a * dim_b != n) {
            throw std::invalid_argument("devectorize: dims do not factor the basis dimension");
        }
        rho.dim_a = dim_a;
        rho.dim_b = dim_b;
    }
    else {
        rho.dim_a = 1;
        rho.dim_b = n;
    }
    rho.matrix = m / static_cast<double>(n);
    return rho;
}

CMat partial_transpose(const CMat &m, int dim_a, int dim_b)
{
    const int n = dim_a * dim_b;
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument("partial_transpose: matrix does not match dims");
    }
    CMat out(n, n);
    for (int i = 0; i < dim_a; ++i) {
        for (int k = 0; k < dim_a; ++k) {
            out.block(k * dim_b, i * dim_b, dim_b, dim_b) =
                m.block(i * dim_b, k * dim_b, dim_b, dim_b);
        }
    }
    return out;
}

CMat partial_transpose(const DensityOperator &rho)
{
    return partial_transpose(rho.matrix, rho.dim_a, rho.dim_b);
}

double hermiticity_error(const CMat &m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const CMat &m)
{
    Eigen::SelfAdjointEigenSolver<CMat> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool is_psd(const CMat &m, double tol)
{
    if (hermiticity_error(m) > tol) {
        throw std::invalid_argument("is_psd: matrix is not Hermitian within tolerance");
    }
    return min_eigenvalue(m) >= -tol;
}

void validate_density_operator(const DensityOperator &rho)
{
    if (rho.dim_a < 1 || rho.dim_b < 1) {
        throw std::invalid_argument("density operator: invalid subsystem dimensions");
    }
    if (rho.matrix.rows() != rho.dim() || rho.matrix.cols() != rho.dim()) {
        throw std::invalid_argument("density operator: matrix shape does not match dims");
    }
    if (hermiticity_error(rho.matrix) > kHermitianTol) {
        throw std::invalid_argument("density operator: not Hermitian within 1e-12");
    }
    if (std::abs(rho.matrix.trace().real() - 1.0) > kHermitianTol ||
        std::abs(rho.matrix.trace().imag()) > kHermitianTol) {
        throw std::invalid_argument("density operator: trace differs from 1 beyond 1e-12");
    }
    if (min_eigenvalue(rho.matrix) < -kPsdTol) {
        throw std::invalid_argument("density operator: negative eigenvalue beyond -1e-9");
    }
}

} // namespace sepell
