#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sepell/state_space.hpp"

namespace sepell {

enum class Label { separable, entangled };

/// Canonical separable ensemble: composite Bloch vectors of product states
/// along all signed single-party basis directions, rescaled toward zero so
/// each vector has norm min(target_norm, its own maximal norm).
struct SeparableEnsemble {
    int dim_a = 0;
    int dim_b = 0;
    double target_norm = 0.0;
    std::vector<BlochVector> vectors;
};

struct LabeledSample {
    BlochVector vector;
    DensityOperator rho;
    Label label = Label::separable;
};

/// Size 2(dim_a^2 - 1) * 2(dim_b^2 - 1). Every vector devectorizes to a PSD
/// product-state mixture with the identity, separable by construction.
SeparableEnsemble canonical_separable_ensemble(int dim_a, int dim_b, double target_norm);

/// Same product directions without the PSD radius cap: each composite vector
/// is rescaled to exactly target_norm, so the set is rotation-balanced across
/// all axes. Coincides with canonical_separable_ensemble for qubit pairs; for
/// d >= 3 some vectors devectorize to non-PSD operators, so the result is a
/// fitting scaffold rather than a physical ensemble.
SeparableEnsemble uniform_axis_ensemble(int dim_a, int dim_b, double target_norm);

/// Ginibre construction: rho = G G^dag / Tr(G G^dag), G with iid standard
/// complex Gaussian entries from the given generator.
DensityOperator ginibre_density(int dim, std::mt19937_64 &rng);
DensityOperator random_density_operator(int dim, std::uint64_t seed);

/// Mixture weights for the labeled-state sampler. Components: a globally
/// random state with Dirichlet(global_theta) spectrum in a Haar eigenbasis, a
/// product of two such single-party states (local_theta), a pure product
/// state mixed with the maximally mixed state by a uniform weight, and a Haar
/// pure state. Fractions must be nonnegative and sum to <= 1; the remainder
/// goes to the global component.
struct SamplerWeights {
    double global_theta = 1.0;
    double local_theta = 1.0;
    double product_fraction = 0.0;
    double depolarized_product_fraction = 0.0;
    double pure_fraction = 0.0;
};

/// Per-dimension defaults, calibrated so both labeled classes spread over a
/// wide range of Bloch radii (rationale recorded with the benchmark notes).
SamplerWeights default_sampler_weights(int dim_a, int dim_b);

/// Draws states of dimension dim_a*dim_b from the mixture above and labels
/// them with the PPT check until both class quotas are met. Requires
/// dim_a*dim_b <= 6, where PPT labeling is exact.
std::vector<LabeledSample> sample_labeled_states(int dim_a, int dim_b, int count_separable,
                                                 int count_entangled, std::uint64_t seed);
std::vector<LabeledSample> sample_labeled_states(int dim_a, int dim_b, int count_separable,
                                                 int count_entangled, std::uint64_t seed,
                                                 const SamplerWeights &weights);

/// 3x3 bound-entangled family parametrized by a in [0, 1].
DensityOperator horodecki_state(double a);

/// Stacks ensemble vectors as columns of an n x m matrix.
RMat stack_points(const std::vector<BlochVector> &vectors);

} // namespace sepell
