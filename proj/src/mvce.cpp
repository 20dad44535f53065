#include "sepell/mvce.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sepell {

namespace {

constexpr long kRefactorInterval = 10000;

} // namespace

Ellipsoid fit_mvce(const RMat &points, const MvceOptions &options)
{
    const Eigen::Index n = points.rows();
    const Eigen::Index m = points.cols();
    if (options.epsilon <= 0.0) {
        throw std::invalid_argument("fit_mvce: epsilon must be positive");
    }
    if (m < n + 1) {
        std::ostringstream msg;
        msg << "fit_mvce: " << m << " points cannot affinely span dimension " << n;
        throw DegenerateInputError(msg.str(), static_cast<int>(m) - 1);
    }

    const Eigen::Index d = n + 1; // lifted dimension
    RMat lifted(d, m);
    lifted.topRows(n) = points;
    lifted.row(n).setOnes();

    RVec weights = RVec::Constant(m, 1.0 / static_cast<double>(m));
    RMat minv(d, d);
    RVec leverage(m);

    auto refactorize = [&]() {
        RMat moment = lifted * weights.asDiagonal() * lifted.transpose();
        if (options.ridge) {
            moment += options.ridge_lambda * RMat::Identity(d, d);
        }
        Eigen::FullPivLU<RMat> lu(moment);
        if (lu.rank() < d) {
            std::ostringstream msg;
            msg << "fit_mvce: points affinely span only dimension " << (lu.rank() - 1) << " of "
                << n;
            throw DegenerateInputError(msg.str(), static_cast<int>(lu.rank()) - 1);
        }
        minv = lu.inverse();
        minv = 0.5 * (minv + minv.transpose());
        RMat t = minv * lifted;
        leverage = (lifted.array() * t.array()).colwise().sum();
    };

    refactorize();

    const double dd = static_cast<double>(d);
    const double threshold = dd * (1.0 + options.epsilon);
    long iterations = 0;
    long since_refactor = 0;
    bool converged = false;

    while (iterations < options.max_iterations) {
        Eigen::Index max_idx = 0;
        double max_lev = leverage.maxCoeff(&max_idx);
        if (max_lev <= threshold) {
            // Confirm against a fresh factorization before accepting.
            refactorize();
            since_refactor = 0;
            max_lev = leverage.maxCoeff(&max_idx);
            if (max_lev <= threshold) {
                converged = true;
                break;
            }
        }

        // Away step on the support point with the smallest leverage when it
        // promises the larger improvement (Wolfe-Atwood variant).
        Eigen::Index min_idx = -1;
        double min_lev = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < m; ++i) {
            if (weights[i] > 0.0 && leverage[i] < min_lev) {
                min_lev = leverage[i];
                min_idx = i;
            }
        }

        Eigen::Index pivot;
        double beta;
        const double gain_add = max_lev / dd - 1.0;
        const double gain_away = 1.0 - min_lev / dd;
        if (min_idx >= 0 && gain_away > gain_add && min_lev > 1.0 + 1e-12) {
            pivot = min_idx;
            beta = (min_lev - dd) / (dd * (min_lev - 1.0));
            beta = std::max(beta, -weights[pivot] / (1.0 - weights[pivot]));
        }
        else {
            pivot = max_idx;
            beta = (max_lev - dd) / (dd * (max_lev - 1.0));
        }

        const double pivot_lev = leverage[pivot];
        weights *= (1.0 - beta);
        weights[pivot] += beta;
        if (weights[pivot] < 0.0) {
            weights[pivot] = 0.0;
        }
        ++iterations;
        ++since_refactor;

        const double denom = 1.0 - beta + beta * pivot_lev;
        if (denom < 1e-12 || since_refactor >= kRefactorInterval) {
            refactorize();
            since_refactor = 0;
            continue;
        }

        // Rank-one Sherman-Morrison update of the inverse moment matrix and
        // of all leverages.
        RVec z = minv * lifted.col(pivot);
        RVec w = lifted.transpose() * z;
        leverage = (leverage.array() - (beta / denom) * w.array().square()) / (1.0 - beta);
        minv.noalias() -= (beta / denom) * (z * z.transpose());
        minv /= (1.0 - beta);
    }

    if (!converged) {
        refactorize();
        const double residual = leverage.maxCoeff() / dd - 1.0;
        if (residual > options.epsilon) {
            std::ostringstream msg;
            msg << "fit_mvce: no (1+epsilon) certificate after " << iterations
                << " iterations, gap " << residual;
            throw NumericalFailureError(msg.str(), residual);
        }
    }

    Ellipsoid e;
    e.dim = static_cast<int>(n);
    e.center = points * weights;
    RMat second_moment =
        points * weights.asDiagonal() * points.transpose() - e.center * e.center.transpose();
    if (options.ridge) {
        second_moment += options.ridge_lambda * RMat::Identity(n, n);
    }
    Eigen::LDLT<RMat> ldlt(second_moment);
    e.shape = ldlt.solve(RMat::Identity(n, n)) / static_cast<double>(n);
    e.shape = 0.5 * (e.shape + e.shape.transpose()).eval();
    e.meta.solver_iterations = iterations;
    e.meta.ridge = options.ridge;
    // leverage is fresh in both exit paths (the confirming refactorization).
    e.meta.certificate_gap = leverage.maxCoeff() / dd - 1.0;

    double worst = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        worst = std::max(worst, quadratic_form(e, points.col(i)));
    }
    e.fit_epsilon = std::max(options.epsilon, worst - 1.0);
    return e;
}

double quadratic_form(const Ellipsoid &e, const RVec &x)
{
    if (x.size() != e.center.size()) {
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    }
    const RVec y = x - e.center;
    return y.dot(e.shape * y);
}

bool contains(const Ellipsoid &e, const RVec &x, double tol)
{
    return quadratic_form(e, x) <= 1.0 + tol;
}

double log_volume(const Ellipsoid &e)
{
    Eigen::SelfAdjointEigenSolver<RMat> solver(e.shape, Eigen::EigenvaluesOnly);
    return -0.5 * solver.eigenvalues().array().log().sum();
}

} // namespace sepell
