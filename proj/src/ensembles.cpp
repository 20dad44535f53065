#include "sepell/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace sepell {

namespace {

// Single-party states (1/d)(I + t s) along every signed basis direction,
// with t the maximal scalar keeping the state PSD. For d >= 3 some axes
// admit t < gamma-normalized unit radius, so t comes from the most negative
// eigenvalue of the signed direction.
std::vector<CMat> axis_states(int dim)
{
    const HermitianBasis basis = gell_mann_basis(dim);
    std::vector<CMat> states;
    states.reserve(2 * basis.matrices.size());
    const CMat identity = CMat::Identity(dim, dim);
    for (const CMat &sigma : basis.matrices) {
        for (double sign : {+1.0, -1.0}) {
            const CMat s = sign * sigma;
            const double lambda_min = min_eigenvalue(s);
            const double t = -1.0 / lambda_min; // lambda_min < 0 for trace-free s != 0
            states.push_back((identity + t * s) / static_cast<double>(dim));
        }
    }
    return states;
}

// Unit-radius analogue of axis_states: (1/d)(I + gamma s), with gamma the
// pure-state Bloch radius. Not PSD along every axis when d >= 3.
std::vector<CMat> unit_axis_operators(int dim)
{
    const HermitianBasis basis = gell_mann_basis(dim);
    std::vector<CMat> operators;
    operators.reserve(2 * basis.matrices.size());
    const CMat identity = CMat::Identity(dim, dim);
    for (const CMat &sigma : basis.matrices) {
        for (double sign : {+1.0, -1.0}) {
            operators.push_back((identity + sign * basis.gamma * sigma) /
                                static_cast<double>(dim));
        }
    }
    return operators;
}

SeparableEnsemble product_direction_ensemble(int dim_a, int dim_b, double target_norm,
                                             const std::vector<CMat> &ops_a,
                                             const std::vector<CMat> &ops_b, bool capped)
{
    const int dim = dim_a * dim_b;
    const HermitianBasis basis = gell_mann_basis(dim);

    SeparableEnsemble ensemble;
    ensemble.dim_a = dim_a;
    ensemble.dim_b = dim_b;
    ensemble.target_norm = target_norm;
    ensemble.vectors.reserve(ops_a.size() * ops_b.size());

    for (const CMat &rho_a : ops_a) {
        for (const CMat &rho_b : ops_b) {
            DensityOperator rho;
            rho.dim_a = dim_a;
            rho.dim_b = dim_b;
            rho.matrix = Eigen::kroneckerProduct(rho_a, rho_b);
            BlochVector r = vectorize(rho, basis);
            const double norm = r.components.norm();
            if (!capped || norm > target_norm) {
                r.components *= target_norm / norm;
            }
            ensemble.vectors.push_back(std::move(r));
        }
    }
    return ensemble;
}

} // namespace

SeparableEnsemble canonical_separable_ensemble(int dim_a, int dim_b, double target_norm)
{
    if (!(target_norm > 0.0 && target_norm <= 1.0)) {
        throw std::invalid_argument("canonical_separable_ensemble: target_norm must be in (0,1]");
    }
    return product_direction_ensemble(dim_a, dim_b, target_norm, axis_states(dim_a),
                                      axis_states(dim_b), true);
}

SeparableEnsemble uniform_axis_ensemble(int dim_a, int dim_b, double target_norm)
{
    if (!(target_norm > 0.0 && target_norm <= 1.0)) {
        throw std::invalid_argument("uniform_axis_ensemble: target_norm must be in (0,1]");
    }
    return product_direction_ensemble(dim_a, dim_b, target_norm, unit_axis_operators(dim_a),
                                      unit_axis_operators(dim_b), false);
}

DensityOperator ginibre_density(int dim, std::mt19937_64 &rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    CMat g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    CMat w = g * g.adjoint();
    DensityOperator rho;
    rho.dim_a = 1;
    rho.dim_b = dim;
    rho.matrix = w / w.trace().real();
    return rho;
}

DensityOperator random_density_operator(int dim, std::uint64_t seed)
{
    if (dim < 2) {
        throw std::invalid_argument("random_density_operator: dimension must be >= 2");
    }
    std::mt19937_64 rng(seed);
    return ginibre_density(dim, rng);
}

namespace {

CMat haar_unitary(int dim, std::mt19937_64 &rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    CMat g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing the phases of the R diagonal makes the distribution Haar.
    for (int i = 0; i < dim; ++i) {
        q.col(i) *= r(i, i) / std::abs(r(i, i));
    }
    return q;
}

// Dirichlet(theta) spectrum in a Haar-random eigenbasis.
CMat spectral_dirichlet_density(int dim, double theta, std::mt19937_64 &rng)
{
    std::gamma_distribution<double> gamma_dist(theta, 1.0);
    RVec lambda(dim);
    double total = 0.0;
    for (int i = 0; i < dim; ++i) {
        lambda[i] = gamma_dist(rng);
        total += lambda[i];
    }
    lambda /= total;
    const CMat u = haar_unitary(dim, rng);
    return u * lambda.asDiagonal() * u.adjoint();
}

Eigen::VectorXcd haar_ket(int dim, std::mt19937_64 &rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = Complex(normal(rng), normal(rng));
    }
    return v / v.norm();
}

} // namespace

SamplerWeights default_sampler_weights(int dim_a, int dim_b)
{
    const int lo = std::min(dim_a, dim_b);
    const int hi = std::max(dim_a, dim_b);
    SamplerWeights weights;
    if (lo == 2 && hi == 2) {
        weights.global_theta = 0.40;
        weights.local_theta = 1.0;
        weights.product_fraction = 0.45;
        weights.depolarized_product_fraction = 0.0;
        weights.pure_fraction = 0.0;
    }
    else if (lo == 2 && hi == 3) {
        weights.global_theta = 0.37;
        weights.local_theta = 1.0;
        weights.product_fraction = 0.40;
        weights.depolarized_product_fraction = 0.15;
        weights.pure_fraction = 0.03;
    }
    // Other dimension pairs keep the flat-spectrum defaults.
    return weights;
}

std::vector<LabeledSample> sample_labeled_states(int dim_a, int dim_b, int count_separable,
                                                 int count_entangled, std::uint64_t seed)
{
    return sample_labeled_states(dim_a, dim_b, count_separable, count_entangled, seed,
                                 default_sampler_weights(dim_a, dim_b));
}

std::vector<LabeledSample> sample_labeled_states(int dim_a, int dim_b, int count_separable,
                                                 int count_entangled, std::uint64_t seed,
                                                 const SamplerWeights &weights)
{
    if (dim_a * dim_b > 6) {
        throw std::invalid_argument(
            "sample_labeled_states: PPT labeling is exact only for dim_a*dim_b <= 6");
    }
    if (count_separable < 0 || count_entangled < 0) {
        throw std::invalid_argument("sample_labeled_states: counts must be >= 0");
    }
    if (weights.product_fraction < 0.0 || weights.depolarized_product_fraction < 0.0 ||
        weights.pure_fraction < 0.0 ||
        weights.product_fraction + weights.depolarized_product_fraction + weights.pure_fraction >
            1.0) {
        throw std::invalid_argument("sample_labeled_states: invalid mixture fractions");
    }
    const int dim = dim_a * dim_b;
    const HermitianBasis basis = gell_mann_basis(dim);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    std::vector<LabeledSample> samples;
    samples.reserve(static_cast<std::size_t>(count_separable) + count_entangled);
    int have_separable = 0;
    int have_entangled = 0;
    while (have_separable < count_separable || have_entangled < count_entangled) {
        DensityOperator rho;
        rho.dim_a = dim_a;
        rho.dim_b = dim_b;
        const double pick = uniform(rng);
        if (pick < weights.product_fraction) {
            rho.matrix = Eigen::kroneckerProduct(
                             spectral_dirichlet_density(dim_a, weights.local_theta, rng),
                             spectral_dirichlet_density(dim_b, weights.local_theta, rng))
                             .eval();
        }
        else if (pick < weights.product_fraction + weights.depolarized_product_fraction) {
            const Eigen::VectorXcd ket_a = haar_ket(dim_a, rng);
            const Eigen::VectorXcd ket_b = haar_ket(dim_b, rng);
            const CMat product = Eigen::kroneckerProduct((ket_a * ket_a.adjoint()).eval(),
                                                         (ket_b * ket_b.adjoint()).eval());
            const double mix = uniform(rng);
            rho.matrix = mix * product + (1.0 - mix) * CMat::Identity(dim, dim) / dim;
        }
        else if (pick < weights.product_fraction + weights.depolarized_product_fraction +
                            weights.pure_fraction) {
            const Eigen::VectorXcd ket = haar_ket(dim, rng);
            rho.matrix = ket * ket.adjoint();
        }
        else {
            rho.matrix = spectral_dirichlet_density(dim, weights.global_theta, rng);
        }
        const bool ppt = min_eigenvalue(partial_transpose(rho)) >= -kPsdTol;
        if (ppt && have_separable >= count_separable) {
            continue;
        }
        if (!ppt && have_entangled >= count_entangled) {
            continue;
        }
        LabeledSample sample;
        sample.vector = vectorize(rho, basis);
        sample.rho = std::move(rho);
        sample.label = ppt ? Label::separable : Label::entangled;
        (ppt ? have_separable : have_entangled) += 1;
        samples.push_back(std::move(sample));
    }
    return samples;
}

DensityOperator horodecki_state(double a)
{
    if (!(a >= 0.0 && a <= 1.0)) {
        throw std::invalid_argument("horodecki_state: parameter must be in [0,1]");
    }
    const double pref = 1.0 / (8.0 * a + 1.0);
    const double root = std::sqrt(1.0 - a * a) / 2.0;
    const double corner = (1.0 + a) / 2.0;

    CMat m = CMat::Zero(9, 9);
    for (int i = 0; i < 9; ++i) {
        m(i, i) = a;
    }
    m(6, 6) = corner;
    m(8, 8) = corner;
    m(0, 4) = m(4, 0) = a;
    m(0, 8) = m(8, 0) = a;
    m(4, 8) = m(8, 4) = a;
    m(6, 8) = m(8, 6) = root;

    DensityOperator rho;
    rho.dim_a = 3;
    rho.dim_b = 3;
    rho.matrix = pref * m;
    return rho;
}

RMat stack_points(const std::vector<BlochVector> &vectors)
{
    if (vectors.empty()) {
        throw std::invalid_argument("stack_points: empty vector list");
    }
    const Eigen::Index n = vectors.front().components.size();
    RMat points(n, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        points.col(static_cast<Eigen::Index>(i)) = vectors[i].components;
    }
    return points;
}

} // namespace sepell
