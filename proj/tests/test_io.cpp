#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "sepell/bench.hpp"
#include "sepell/geometry.hpp"
#include "sepell/io.hpp"

using namespace sepell;

TEST_CASE("ellipsoid JSON round trip preserves classification")
{
    const Ellipsoid e = fit_canonical_mvce(2, 2, 0.5);
    const Ellipsoid back = ellipsoid_from_json(ellipsoid_to_json(e));
    CHECK(back.dim == e.dim);
    CHECK((back.shape - e.shape).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((back.center - e.center).norm() < 1e-12);
    CHECK(back.fit_epsilon == e.fit_epsilon);
    CHECK(back.meta.dim_a == 2);
    CHECK(back.meta.dim_b == 2);
    CHECK(back.meta.target_norm == 0.5);
    CHECK(back.meta.basis_tag == e.meta.basis_tag);
    CHECK(back.meta.certificate_gap == e.meta.certificate_gap);

    // Any vector classifies identically against original and round trip.
    RVec probe = RVec::Zero(15);
    probe(0) = 0.9;
    CHECK(std::abs(quadratic_form(e, probe) - quadratic_form(back, probe)) < 1e-9);
}

TEST_CASE("density operator JSON round trip")
{
    const DensityOperator rho = horodecki_state(0.4);
    const DensityOperator back = density_from_json(density_to_json(rho));
    CHECK(back.dim_a == 3);
    CHECK(back.dim_b == 3);
    CHECK((back.matrix - rho.matrix).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("witness JSON round trip")
{
    const HermitianBasis basis = gell_mann_basis(4);
    const Ellipsoid e = fit_canonical_mvce(2, 2, 0.5);
    RVec bell = RVec::Zero(15);
    bell(0) = 1.0; // any strictly exterior direction works here
    const PseudoWitness w = tangent_witness(e, bell, basis);
    const PseudoWitness back = witness_from_json(witness_to_json(w));
    CHECK((back.normal - w.normal).norm() < 1e-15);
    CHECK(back.offset == w.offset);
    CHECK((back.matrix_form - w.matrix_form).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((back.foot - w.foot).norm() < 1e-15);
}

TEST_CASE("ensemble JSON round trip")
{
    const SeparableEnsemble ensemble = canonical_separable_ensemble(2, 3, 0.7);
    const SeparableEnsemble back = ensemble_from_json(ensemble_to_json(ensemble));
    CHECK(back.dim_a == 2);
    CHECK(back.dim_b == 3);
    CHECK(back.target_norm == 0.7);
    REQUIRE(back.vectors.size() == ensemble.vectors.size());
    for (std::size_t i = 0; i < back.vectors.size(); ++i) {
        CHECK((back.vectors[i].components - ensemble.vectors[i].components).norm() < 1e-15);
    }
}

TEST_CASE("file round trip and error paths")
{
    const std::string path = "io_test_model.json";
    const Ellipsoid e = fit_canonical_mvce(2, 2, 0.5);
    save_json(ellipsoid_to_json(e), path);
    const Ellipsoid back = ellipsoid_from_json(load_json(path));
    CHECK(back.dim == e.dim);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_json("does_not_exist.json"), std::runtime_error);
    CHECK_THROWS_AS(save_json({}, "/nonexistent_dir/x.json"), std::runtime_error);
}

TEST_CASE("malformed payloads are rejected")
{
    nlohmann::json bad_density = {{"dim_a", 2}, {"dim_b", 2}, {"matrix", {1.0, 2.0}}};
    CHECK_THROWS_AS(density_from_json(bad_density), std::invalid_argument);

    nlohmann::json bad_dims = {{"dim_a", 0}, {"dim_b", 2}, {"matrix", nlohmann::json::array()}};
    CHECK_THROWS_AS(density_from_json(bad_dims), std::invalid_argument);

    nlohmann::json truncated = ellipsoid_to_json(fit_canonical_mvce(2, 2, 0.5));
    truncated["shape"] = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(ellipsoid_from_json(truncated), std::invalid_argument);

    nlohmann::json missing = truncated;
    missing.erase("center");
    CHECK_THROWS(ellipsoid_from_json(missing));
}
