#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sepell/bench.hpp"
#include "sepell/geometry.hpp"
#include "test_oracles.hpp"

using namespace sepell;

namespace {

// Bloch vector of the Bell state (|00> + |11>)/sqrt(2).
BlochVector bell_vector()
{
    const HermitianBasis basis = gell_mann_basis(4);
    Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(4);
    ket(0) = ket(3) = 1.0 / std::sqrt(2.0);
    DensityOperator rho;
    rho.dim_a = 2;
    rho.dim_b = 2;
    rho.matrix = ket * ket.adjoint();
    return vectorize(rho, basis);
}

} // namespace

TEST_CASE("projection: interior points are fixed, unit-ball distances are exact")
{
    Ellipsoid ball;
    ball.dim = 3;
    ball.shape = RMat::Identity(3, 3);
    ball.center = RVec::Zero(3);
    ball.fit_epsilon = 1e-9;

    RVec interior(3);
    interior << 0.2, -0.3, 0.1;
    const auto fixed = project_to_ellipsoid(ball, interior);
    CHECK(fixed.distance == 0.0);
    CHECK((fixed.point - interior).norm() == 0.0);

    RVec outside(3);
    outside << 3.0, 0.0, 0.0;
    const auto proj = project_to_ellipsoid(ball, outside);
    CHECK(proj.distance == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(proj.point(0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("projection agrees with the projected-gradient oracle on random instances")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const Ellipsoid e = testing::random_ellipsoid(2 + trial % 7, rng);
        const RVec r = testing::exterior_point(e, rng, 2.0 + trial % 3);
        const double secular = project_to_ellipsoid(e, r).distance;
        const double oracle = testing::ellipsoid_distance_pg(e, r);
        CHECK(std::abs(secular - oracle) < 1e-8);
    }
}

TEST_CASE("projection feet land on the boundary")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const Ellipsoid e = testing::random_ellipsoid(5, rng);
        const RVec r = testing::exterior_point(e, rng);
        const auto proj = project_to_ellipsoid(e, r);
        CHECK(quadratic_form(e, proj.point) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("classification against the 2x2 ensemble ellipsoid")
{
    const Ellipsoid e = fit_canonical_mvce(2, 2, 0.5);
    const BlochVector bell = bell_vector();
    CHECK(bell.components.norm() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(classify(e, bell, e.fit_epsilon) == Label::entangled);
    CHECK(project_to_ellipsoid(e, bell.components).distance > 0.0);

    BlochVector mixed;
    mixed.dim = 4;
    mixed.components = RVec::Zero(15);
    CHECK(classify(e, mixed, e.fit_epsilon) == Label::separable);
}

TEST_CASE("tangent witness separates its target from the ellipsoid")
{
    const HermitianBasis basis = gell_mann_basis(4);
    const Ellipsoid e = fit_canonical_mvce(2, 2, 0.5);
    const BlochVector bell = bell_vector();
    const PseudoWitness w = tangent_witness(e, bell.components, basis);

    // Positive on the target, zero at the foot, nonpositive on the ensemble.
    CHECK(w.normal.dot(bell.components) - w.offset > 0.0);
    CHECK(std::abs(w.normal.dot(w.foot) - w.offset) < 1e-9);
    const SeparableEnsemble ensemble = canonical_separable_ensemble(2, 2, 0.5);
    for (const BlochVector &v : ensemble.vectors) {
        CHECK(w.normal.dot(v.components) - w.offset <= 1e-8);
    }

    // The operator form vanishes on the devectorized foot.
    BlochVector foot;
    foot.dim = 4;
    foot.components = w.foot;
    const DensityOperator sigma = devectorize(foot, basis, 2, 2);
    CHECK(std::abs((w.matrix_form * sigma.matrix).trace()) < 1e-9);
    // And it is positive on the target state.
    const DensityOperator rho = devectorize(bell, basis, 2, 2);
    CHECK((w.matrix_form * rho.matrix).trace().real() > 0.0);
}

TEST_CASE("tangent witness requires a strictly exterior point")
{
    const HermitianBasis basis = gell_mann_basis(4);
    const Ellipsoid e = fit_canonical_mvce(2, 2, 0.5);
    CHECK_THROWS_AS(tangent_witness(e, RVec::Zero(15), basis), std::invalid_argument);
}

TEST_CASE("witness bound lower-bounds the hull distance")
{
    const HermitianBasis basis = gell_mann_basis(4);
    const SeparableEnsemble ensemble = canonical_separable_ensemble(2, 2, 0.5);
    const Ellipsoid e = fit_canonical_mvce(2, 2, 0.5);
    const BlochVector bell = bell_vector();
    const PseudoWitness w = tangent_witness(e, bell.components, basis);

    const double bound = witness_bound(w, bell.components, ensemble);
    CHECK(bound > 0.0);
    const double hull = testing::hull_distance_pg(stack_points(ensemble.vectors),
                                                  bell.components);
    CHECK(bound <= hull + 1e-8);
}
