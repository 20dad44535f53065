#pragma once

#include <vector>

#include "sepell/errors.hpp"
#include "sepell/state_space.hpp"

namespace sepell {

/// PPT predicate: the partial transpose is PSD within tol. Equivalent to
/// separability exactly for 2x2 and 2x3 systems; necessary otherwise.
bool ppt_separable(const DensityOperator &rho, double tol = kPsdTol);

struct HsProjectionResult {
    double distance = 0.0;
    DensityOperator sigma; // Frobenius projection onto the PPT state set
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> residual_history;
};

/// Frobenius projection onto { sigma : sigma >= 0, Tr sigma = 1,
/// sigma^{T_A} >= 0 } by Dykstra's alternating projections between the
/// density-operator set (eigenvalue simplex projection) and the PPT cone
/// (clip negative partial-transpose eigenvalues). For 2x2 and 2x3 the
/// distance equals the Hilbert-Schmidt distance to the separable set;
/// otherwise it is a lower bound.
HsProjectionResult hs_distance_true(const DensityOperator &rho, double tol = 1e-9,
                                    int max_iter = 20000);

/// Projection helpers, exposed for independent feasibility checks.
CMat project_to_density_set(const CMat &m);
CMat project_to_ppt_cone(const CMat &m, int dim_a, int dim_b);

} // namespace sepell
