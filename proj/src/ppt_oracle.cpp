#include "sepell/ppt_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sepell {

namespace {

// Euclidean projection of v onto the probability simplex (sort, running
// threshold).
RVec project_to_simplex(const RVec &v)
{
    const Eigen::Index n = v.size();
    std::vector<double> sorted(v.data(), v.data() + n);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());

    double cumulative = 0.0;
    double theta = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        cumulative += sorted[static_cast<std::size_t>(k)];
        const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
        if (sorted[static_cast<std::size_t>(k)] - candidate > 0.0) {
            theta = candidate;
        }
    }
    return (v.array() - theta).max(0.0);
}

} // namespace

bool ppt_separable(const DensityOperator &rho, double tol)
{
    return min_eigenvalue(partial_transpose(rho)) >= -tol;
}

CMat project_to_density_set(const CMat &m)
{
    const CMat h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> solver(h);
    const RVec clipped = project_to_simplex(solver.eigenvalues());
    return solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
}

CMat project_to_ppt_cone(const CMat &m, int dim_a, int dim_b)
{
    const CMat h = 0.5 * (m + m.adjoint());
    const CMat pt = partial_transpose(h, dim_a, dim_b);
    Eigen::SelfAdjointEigenSolver<CMat> solver(pt);
    const RVec clipped = solver.eigenvalues().cwiseMax(0.0);
    const CMat psd = solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
    // Partial transposition is a Frobenius isometry, so this is the exact
    // projection onto the PPT cone.
    return partial_transpose(psd, dim_a, dim_b);
}

HsProjectionResult hs_distance_true(const DensityOperator &rho, double tol, int max_iter)
{
    const int n = rho.dim();
    CMat x = rho.matrix;
    CMat p = CMat::Zero(n, n);
    CMat q = CMat::Zero(n, n);
    CMat y = CMat::Zero(n, n);

    HsProjectionResult result;
    result.residual_history.reserve(64);

    bool converged = false;
    for (int k = 0; k < max_iter; ++k) {
        const CMat y_new = project_to_density_set(x + p);
        p = x + p - y_new;
        const CMat x_new = project_to_ppt_cone(y_new + q, rho.dim_a, rho.dim_b);
        q = y_new + q - x_new;

        const double move = std::max((x_new - x).norm(), (y_new - y).norm());
        result.residual = move;
        result.residual_history.push_back(move);
        x = x_new;
        y = y_new;
        result.iterations = k + 1;
        if (k > 0 && move < tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "hs_distance_true: residual " << result.residual << " after " << max_iter
            << " iterations";
        throw NumericalFailureError(msg.str(), result.residual);
    }

    result.sigma.dim_a = rho.dim_a;
    result.sigma.dim_b = rho.dim_b;
    result.sigma.matrix = y; // density-set iterate: PSD with unit trace exactly
    result.distance = (rho.matrix - y).norm();
    return result;
}

} // namespace sepell
