#pragma once

#include "sepell/ensembles.hpp"
#include "sepell/errors.hpp"
#include "sepell/mvce.hpp"
#include "sepell/state_space.hpp"

namespace sepell {

struct EllipsoidProjection {
    RVec point;      // nearest point of the ellipsoid
    double distance; // Euclidean distance, 0 for interior inputs
    int iterations;
};

/// Euclidean projection onto the ellipsoid. Interior points project to
/// themselves; otherwise the secular equation of the one-dimensional dual is
/// solved by safeguarded Newton.
EllipsoidProjection project_to_ellipsoid(const Ellipsoid &e, const RVec &r);

/// Separable iff the vector falls inside (boundary inclusive at tol).
Label classify(const Ellipsoid &e, const BlochVector &r, double tol);

/// Tangent hyperplane at the projection foot, plus its operator form
/// W = c0 I + sum_i normal_i s_i with Tr(W devectorize(foot)) = 0.
/// The sign convention gives the state under test a positive value; the
/// tangent plane separates relative to the MVCE only, not the true
/// separable set, so this is a pseudo-witness.
struct PseudoWitness {
    RVec normal;
    double offset = 0.0;
    CMat matrix_form;
    RVec foot;
};

/// Requires r strictly outside e (quadratic form > 1 + fit_epsilon).
PseudoWitness tangent_witness(const Ellipsoid &e, const RVec &r, const HermitianBasis &basis);

/// (normal.r - max_x normal.x) / |normal| over the ensemble vectors: a lower
/// bound on the Euclidean distance from r to the ensemble's convex hull.
double witness_bound(const PseudoWitness &w, const RVec &r, const SeparableEnsemble &ensemble);

} // namespace sepell
