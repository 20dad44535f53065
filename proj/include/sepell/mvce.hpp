#pragma once

#include <string>
#include <vector>

#include "sepell/errors.hpp"
#include "sepell/state_space.hpp"

namespace sepell {

struct EllipsoidMeta {
    int dim_a = 0;
    int dim_b = 0;
    double target_norm = 0.0;
    std::string basis_tag = "gell-mann-alpha2";
    long solver_iterations = 0;
    bool ridge = false;
    // max leverage / (n+1) - 1 at the accepted optimality certificate.
    double certificate_gap = 0.0;
};

/// { x : (x - center)^T shape (x - center) <= 1 } with shape symmetric
/// positive definite. fit_epsilon is the certificate gap: every fit input
/// point has quadratic form <= 1 + fit_epsilon.
struct Ellipsoid {
    int dim = 0;
    RMat shape;
    RVec center;
    double fit_epsilon = 0.0;
    EllipsoidMeta meta;
};

struct MvceOptions {
    double epsilon = 1e-7;
    long max_iterations = 1000000;
    bool ridge = false;
    double ridge_lambda = 1e-8;
};

/// Minimum volume covering ellipsoid of the columns of points, by barycentric
/// coordinate ascent on the lifted moment matrix with away steps. Terminates
/// when max leverage <= (n+1)(1+epsilon).
///
/// Throws DegenerateInputError when the points do not affinely span (unless
/// options.ridge is set), NumericalFailureError on hitting the iteration cap.
Ellipsoid fit_mvce(const RMat &points, const MvceOptions &options = {});

double quadratic_form(const Ellipsoid &e, const RVec &x);
bool contains(const Ellipsoid &e, const RVec &x, double tol);

/// -(1/2) logdet(shape); proportional to log-volume with the unit-ball
/// constant dropped.
double log_volume(const Ellipsoid &e);

} // namespace sepell
