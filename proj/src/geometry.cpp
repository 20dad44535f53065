#include "sepell/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sepell {

namespace {

constexpr double kSecularTol = 1e-12;
constexpr int kSecularMaxIter = 200;

} // namespace

EllipsoidProjection project_to_ellipsoid(const Ellipsoid &e, const RVec &r)
{
    if (r.size() != e.center.size()) {
        throw std::invalid_argument("project_to_ellipsoid: dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<RMat> solver(e.shape);
    const RVec a = solver.eigenvalues();
    const RMat &v = solver.eigenvectors();
    const RVec y = v.transpose() * (r - e.center);

    auto residual = [&](double lambda) {
        return (a.array() * y.array().square() / (1.0 + lambda * a.array()).square()).sum() - 1.0;
    };

    if (residual(0.0) <= 0.0) {
        return {r, 0.0, 0};
    }

    // Bracket: the residual is decreasing in lambda and negative for large
    // lambda, so double an upper bound until it changes sign.
    double lo = 0.0;
    double hi = 1.0;
    while (residual(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e300) {
            throw NumericalFailureError("project_to_ellipsoid: failed to bracket multiplier",
                                        residual(hi));
        }
    }

    double lambda = 0.0;
    double f = residual(lambda);
    int iter = 0;
    for (; iter < kSecularMaxIter; ++iter) {
        if (std::abs(f) < kSecularTol) {
            break;
        }
        if (f > 0.0) {
            lo = lambda;
        }
        else {
            hi = lambda;
        }
        const double fprime =
            -2.0 *
            (a.array().square() * y.array().square() / (1.0 + lambda * a.array()).cube()).sum();
        double next = lambda - f / fprime;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        lambda = next;
        f = residual(lambda);
    }
    if (std::abs(f) >= kSecularTol) {
        std::ostringstream msg;
        msg << "project_to_ellipsoid: secular equation residual " << f << " after "
            << kSecularMaxIter << " iterations";
        throw NumericalFailureError(msg.str(), f);
    }

    const RVec s = e.center + v * (y.array() / (1.0 + lambda * a.array())).matrix();
    return {s, (r - s).norm(), iter};
}

Label classify(const Ellipsoid &e, const BlochVector &r, double tol)
{
    return contains(e, r.components, tol) ? Label::separable : Label::entangled;
}

PseudoWitness tangent_witness(const Ellipsoid &e, const RVec &r, const HermitianBasis &basis)
{
    const Eigen::Index n = static_cast<Eigen::Index>(basis.dim) * basis.dim - 1;
    if (r.size() != e.center.size() || n != e.center.size()) {
        throw std::invalid_argument("tangent_witness: dimension mismatch");
    }
    if (quadratic_form(e, r) <= 1.0 + e.fit_epsilon) {
        throw std::invalid_argument("tangent_witness: state is not strictly outside the ellipsoid");
    }

    const EllipsoidProjection proj = project_to_ellipsoid(e, r);

    PseudoWitness w;
    w.foot = proj.point;
    w.normal = e.shape * (proj.point - e.center);
    w.offset = w.normal.dot(proj.point);
    if (w.normal.dot(r) - w.offset < 0.0) {
        w.normal = -w.normal;
        w.offset = -w.offset;
    }

    // <W, rho(x)> = (gamma*alpha/N)(normal.x - offset): zero on the tangent
    // plane, negative on the ellipsoid side, positive at r.
    const int dim = basis.dim;
    const double c0 = -basis.gamma * basis.alpha / dim * w.offset;
    CMat matrix = c0 * CMat::Identity(dim, dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        matrix += w.normal[i] * basis.matrices[static_cast<std::size_t>(i)];
    }
    w.matrix_form = std::move(matrix);
    return w;
}

double witness_bound(const PseudoWitness &w, const RVec &r, const SeparableEnsemble &ensemble)
{
    if (ensemble.vectors.empty()) {
        throw std::invalid_argument("witness_bound: empty ensemble");
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const BlochVector &x : ensemble.vectors) {
        if (x.components.size() != w.normal.size()) {
            throw std::invalid_argument("witness_bound: dimension mismatch");
        }
        best = std::max(best, w.normal.dot(x.components));
    }
    return (w.normal.dot(r) - best) / w.normal.norm();
}

} // namespace sepell
