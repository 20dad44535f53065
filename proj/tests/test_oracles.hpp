#pragma once

// Independent reference implementations used to cross-check the library.
// These deliberately avoid the code paths under test: projection onto an
// ellipsoid is done by projected gradient in a whitened coordinate system
// (no secular equation), and the distance to a convex hull is a simplex-
// constrained least-squares problem solved by projected gradient (no
// tangent-plane construction).

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "sepell/mvce.hpp"
#include "sepell/state_space.hpp"

namespace sepell::testing {

// Euclidean projection of v onto the probability simplex.
inline RVec simplex_projection(const RVec &v)
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

// min ||x - r|| over the ellipsoid, by projected gradient on the whitened
// variable y = A^{1/2} (x - c) constrained to the unit ball.
inline double ellipsoid_distance_pg(const Ellipsoid &e, const RVec &r, int iterations = 20000)
{
    Eigen::SelfAdjointEigenSolver<RMat> es(e.shape);
    const RVec a = es.eigenvalues();
    const RMat &v = es.eigenvectors();
    const RMat half_inv = v * a.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();

    const RVec d = r - e.center;
    RVec y = RVec::Zero(r.size());
    const double lipschitz = a.cwiseInverse().maxCoeff();
    const double step = 1.0 / lipschitz;
    for (int k = 0; k < iterations; ++k) {
        const RVec grad = half_inv * (half_inv * y - d);
        y -= step * grad;
        const double norm = y.norm();
        if (norm > 1.0) {
            y /= norm;
        }
    }
    return (half_inv * y - d).norm();
}

// min ||X w - r|| over the simplex (distance from r to the convex hull of
// the columns of X), by projected gradient.
inline double hull_distance_pg(const RMat &points, const RVec &r, int iterations = 50000)
{
    const Eigen::Index m = points.cols();
    RVec w = RVec::Constant(m, 1.0 / static_cast<double>(m));
    const RMat gram = points.transpose() * points;
    const RVec cross = points.transpose() * r;
    Eigen::SelfAdjointEigenSolver<RMat> es(gram, Eigen::EigenvaluesOnly);
    const double step = 1.0 / std::max(es.eigenvalues().maxCoeff(), 1e-12);
    for (int k = 0; k < iterations; ++k) {
        w = simplex_projection(w - step * (gram * w - cross));
    }
    return (points * w - r).norm();
}

// Well-conditioned random ellipsoid: eigenvalues log-uniform in
// [1/condition, condition], Gaussian center.
inline Ellipsoid random_ellipsoid(int dim, std::mt19937_64 &rng, double condition = 10.0)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    RMat g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = normal(rng);
        }
    }
    const Eigen::HouseholderQR<RMat> qr(g);
    const RMat q = qr.householderQ();
    RVec eigenvalues(dim);
    for (int i = 0; i < dim; ++i) {
        eigenvalues[i] = std::pow(condition, uniform(rng));
    }
    Ellipsoid e;
    e.dim = dim;
    e.shape = q * eigenvalues.asDiagonal() * q.transpose();
    e.shape = 0.5 * (e.shape + e.shape.transpose()).eval();
    e.center = RVec::NullaryExpr(dim, [&](Eigen::Index) { return normal(rng); });
    e.fit_epsilon = 1e-7;
    return e;
}

// A point strictly outside e, at quadratic form about target_form > 1.
inline RVec exterior_point(const Ellipsoid &e, std::mt19937_64 &rng, double target_form = 4.0)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    RVec direction = RVec::NullaryExpr(e.center.size(), [&](Eigen::Index) { return normal(rng); });
    const double form = direction.dot(e.shape * direction);
    return e.center + direction * std::sqrt(target_form / form);
}

} // namespace sepell::testing
