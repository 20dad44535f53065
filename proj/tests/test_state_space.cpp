#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sepell/ensembles.hpp"
#include "sepell/state_space.hpp"

using namespace sepell;

TEST_CASE("basis orthogonality and normalization, dims 2-6")
{
    for (int dim = 2; dim <= 6; ++dim) {
        const HermitianBasis basis = gell_mann_basis(dim);
        REQUIRE(basis.matrices.size() == static_cast<std::size_t>(dim) * dim - 1);
        CHECK(basis.alpha == 2.0);
        CHECK(basis.gamma == doctest::Approx(std::sqrt(dim * (dim - 1.0) / 2.0)).epsilon(1e-15));
        for (std::size_t i = 0; i < basis.matrices.size(); ++i) {
            CHECK(basis.matrices[i].adjoint().isApprox(basis.matrices[i], 1e-14));
            CHECK(std::abs(basis.matrices[i].trace()) < 1e-14);
            for (std::size_t j = 0; j < basis.matrices.size(); ++j) {
                const Complex overlap = (basis.matrices[i] * basis.matrices[j]).trace();
                const double expected = i == j ? 2.0 : 0.0;
                CHECK(std::abs(overlap - expected) < 1e-12);
            }
        }
    }
}

TEST_CASE("pure states vectorize to unit norm")
{
    std::mt19937_64 rng(11);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int dim : {2, 3, 4, 6, 9}) {
        const HermitianBasis basis = gell_mann_basis(dim);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::VectorXcd ket(dim);
            for (int i = 0; i < dim; ++i) {
                ket(i) = Complex(normal(rng), normal(rng));
            }
            ket /= ket.norm();
            DensityOperator rho;
            rho.dim_a = 1;
            rho.dim_b = dim;
            rho.matrix = ket * ket.adjoint();
            CHECK(vectorize(rho, basis).components.norm() == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("vectorize/devectorize round trip on random mixed states")
{
    std::mt19937_64 rng(12);
    const HermitianBasis basis = gell_mann_basis(4);
    for (int trial = 0; trial < 100; ++trial) {
        DensityOperator rho = ginibre_density(4, rng);
        rho.dim_a = 2;
        rho.dim_b = 2;
        const BlochVector r = vectorize(rho, basis);
        CHECK(r.components.norm() < 1.0); // mixed states are strictly inside the unit ball
        const DensityOperator back = devectorize(r, basis, 2, 2);
        CHECK((back.matrix - rho.matrix).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(back.dim_a == 2);
        CHECK(back.dim_b == 2);
    }
}

TEST_CASE("maximally mixed state vectorizes to zero")
{
    const HermitianBasis basis = gell_mann_basis(6);
    DensityOperator rho;
    rho.dim_a = 2;
    rho.dim_b = 3;
    rho.matrix = CMat::Identity(6, 6) / 6.0;
    CHECK(vectorize(rho, basis).components.norm() < 1e-14);
}

TEST_CASE("partial transpose is a trace-preserving involution")
{
    std::mt19937_64 rng(13);
    for (auto [da, db] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        DensityOperator rho = ginibre_density(da * db, rng);
        rho.dim_a = da;
        rho.dim_b = db;
        const CMat pt = partial_transpose(rho);
        CHECK(std::abs(pt.trace() - rho.matrix.trace()) < 1e-14);
        CHECK(partial_transpose(pt, da, db).isApprox(rho.matrix, 1e-14));
        CHECK(hermiticity_error(pt) < 1e-14);
    }
}

TEST_CASE("validate_density_operator rejects invariant violations")
{
    DensityOperator rho;
    rho.dim_a = 2;
    rho.dim_b = 2;
    rho.matrix = CMat::Identity(4, 4) / 4.0;
    CHECK_NOTHROW(validate_density_operator(rho));

    DensityOperator bad_trace = rho;
    bad_trace.matrix *= 2.0;
    CHECK_THROWS_AS(validate_density_operator(bad_trace), std::invalid_argument);

    DensityOperator not_hermitian = rho;
    not_hermitian.matrix(0, 1) = Complex(0.5, 0.0);
    CHECK_THROWS_AS(validate_density_operator(not_hermitian), std::invalid_argument);

    DensityOperator not_psd = rho;
    not_psd.matrix(0, 0) = Complex(-0.25, 0.0);
    not_psd.matrix(1, 1) = Complex(0.75, 0.0);
    CHECK_THROWS_AS(validate_density_operator(not_psd), std::invalid_argument);

    DensityOperator bad_shape = rho;
    bad_shape.dim_b = 3;
    CHECK_THROWS_AS(validate_density_operator(bad_shape), std::invalid_argument);
}

TEST_CASE("gell_mann_basis rejects dimension below 2")
{
    CHECK_THROWS_AS(gell_mann_basis(1), std::invalid_argument);
}
