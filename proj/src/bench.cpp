#include "sepell/bench.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "sepell/io.hpp"
#include "sepell/ppt_oracle.hpp"

namespace sepell {

namespace {

std::vector<double> a_grid(int a_count)
{
    if (a_count < 1) {
        throw std::invalid_argument("a_count must be >= 1");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(a_count));
    const double lo = 0.001;
    const double hi = 1.0;
    for (int i = 0; i < a_count; ++i) {
        grid.push_back(a_count == 1 ? lo : lo + (hi - lo) * i / (a_count - 1.0));
    }
    return grid;
}

std::ofstream open_csv(const std::string &path)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    return out;
}

// Shortest decimal representation that round-trips to the same double.
std::string fmt(double value)
{
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

} // namespace

Ellipsoid fit_canonical_mvce(int dim_a, int dim_b, double target_norm, double epsilon)
{
    const SeparableEnsemble ensemble = canonical_separable_ensemble(dim_a, dim_b, target_norm);
    MvceOptions options;
    options.epsilon = epsilon;
    Ellipsoid e = fit_mvce(stack_points(ensemble.vectors), options);
    e.meta.dim_a = dim_a;
    e.meta.dim_b = dim_b;
    e.meta.target_norm = target_norm;
    return e;
}

double bench_radius_factor(int dim_a, int dim_b)
{
    const int lo = std::min(dim_a, dim_b);
    const int hi = std::max(dim_a, dim_b);
    if (lo == 2 && hi == 3) {
        return 0.96;
    }
    if (lo == 3 && hi == 3) {
        return 0.6;
    }
    return 1.0;
}

Ellipsoid fit_bench_mvce(int dim_a, int dim_b, double target_norm, double epsilon)
{
    const SeparableEnsemble ensemble = uniform_axis_ensemble(
        dim_a, dim_b, bench_radius_factor(dim_a, dim_b) * target_norm);
    MvceOptions options;
    options.epsilon = epsilon;
    Ellipsoid e = fit_mvce(stack_points(ensemble.vectors), options);
    e.meta.dim_a = dim_a;
    e.meta.dim_b = dim_b;
    e.meta.target_norm = target_norm;
    return e;
}

std::vector<ConfusionRow> run_confusion_experiment(int dim_a, int dim_b, int samples_per_class,
                                                   const std::vector<double> &norms,
                                                   std::uint64_t seed)
{
    const std::vector<LabeledSample> samples =
        sample_labeled_states(dim_a, dim_b, samples_per_class, samples_per_class, seed);

    std::vector<ConfusionRow> rows;
    rows.reserve(norms.size());
    for (double norm : norms) {
        const Ellipsoid e = fit_bench_mvce(dim_a, dim_b, norm);
        ConfusionRow row;
        row.target_norm = norm;
        row.sample_size = samples_per_class;
        row.seed = seed;
        for (const LabeledSample &sample : samples) {
            const bool inside = contains(e, sample.vector.components, e.fit_epsilon);
            if (sample.label == Label::separable && !inside) {
                ++row.false_positives;
            }
            if (sample.label == Label::entangled && inside) {
                ++row.false_negatives;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<BeDetectionRow> run_be_detection(const std::vector<double> &norms, int a_count)
{
    const HermitianBasis basis = gell_mann_basis(9);
    const std::vector<double> grid = a_grid(a_count);

    std::vector<RVec> vectors;
    vectors.reserve(grid.size());
    for (double a : grid) {
        vectors.push_back(vectorize(horodecki_state(a), basis).components);
    }

    std::vector<BeDetectionRow> rows;
    rows.reserve(norms.size());
    for (double norm : norms) {
        const Ellipsoid e = fit_bench_mvce(3, 3, norm);
        BeDetectionRow row;
        row.target_norm = norm;
        row.a_count = a_count;
        for (const RVec &r : vectors) {
            if (!contains(e, r, e.fit_epsilon)) {
                ++row.detected;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<DistanceComparisonRow> run_distance_comparison(int dim_a, int dim_b, int count,
                                                           double norm, std::uint64_t seed)
{
    if (dim_a != 2 || dim_b != 2) {
        throw std::invalid_argument("run_distance_comparison: only 2x2 systems are supported");
    }
    const std::vector<LabeledSample> samples = sample_labeled_states(dim_a, dim_b, 0, count, seed);
    const Ellipsoid e = fit_bench_mvce(dim_a, dim_b, norm);

    // true_distance is a Frobenius distance between operators; the projection
    // distance lives in Bloch coordinates, so convert it to the same units.
    const HermitianBasis basis = gell_mann_basis(dim_a * dim_b);
    const double hs_scale = basis.gamma * std::sqrt(basis.alpha) / basis.dim;

    std::vector<DistanceComparisonRow> rows;
    rows.reserve(samples.size());
    int id = 0;
    for (const LabeledSample &sample : samples) {
        DistanceComparisonRow row;
        row.sample_id = id++;
        row.true_distance = hs_distance_true(sample.rho).distance;
        row.mvce_distance =
            hs_scale * project_to_ellipsoid(e, sample.vector.components).distance;
        rows.push_back(row);
    }
    return rows;
}

BeCurve run_be_norm_distance(double norm, int a_count)
{
    const HermitianBasis basis = gell_mann_basis(9);
    const Ellipsoid e = fit_bench_mvce(3, 3, norm);

    BeCurve curve;
    curve.rows.reserve(static_cast<std::size_t>(a_count));
    for (double a : a_grid(a_count)) {
        const BlochVector r = vectorize(horodecki_state(a), basis);
        BeCurveRow row;
        row.a = a;
        row.bloch_norm = r.components.norm();
        row.mvce_distance = project_to_ellipsoid(e, r.components).distance;
        curve.rows.push_back(row);
    }

    // OLS of distance against Bloch norm.
    const auto n = static_cast<double>(curve.rows.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const BeCurveRow &row : curve.rows) {
        sx += row.bloch_norm;
        sy += row.mvce_distance;
        sxx += row.bloch_norm * row.bloch_norm;
        sxy += row.bloch_norm * row.mvce_distance;
        syy += row.mvce_distance * row.mvce_distance;
    }
    const double var_x = sxx - sx * sx / n;
    const double var_y = syy - sy * sy / n;
    const double cov = sxy - sx * sy / n;
    curve.slope = cov / var_x;
    curve.intercept = (sy - curve.slope * sx) / n;
    curve.r_squared = var_y > 0.0 ? (cov * cov) / (var_x * var_y) : 1.0;
    return curve;
}

void write_confusion_csv(const std::vector<ConfusionRow> &rows, const std::string &path)
{
    std::ofstream out = open_csv(path);
    out << "target_norm,false_positives,false_negatives,sample_size,seed\n";
    for (const ConfusionRow &row : rows) {
        out << fmt(row.target_norm) << "," << row.false_positives << ","
            << row.false_negatives << "," << row.sample_size << "," << row.seed << "\n";
    }
}

void write_be_detection_csv(const std::vector<BeDetectionRow> &rows, const std::string &path)
{
    std::ofstream out = open_csv(path);
    out << "target_norm,detected,a_count\n";
    for (const BeDetectionRow &row : rows) {
        out << fmt(row.target_norm) << "," << row.detected << "," << row.a_count << "\n";
    }
}

void write_distance_comparison_csv(const std::vector<DistanceComparisonRow> &rows,
                                   const std::string &path)
{
    std::ofstream out = open_csv(path);
    out << "sample_id,true_distance,mvce_distance\n";
    for (const DistanceComparisonRow &row : rows) {
        out << row.sample_id << "," << fmt(row.true_distance) << "," << fmt(row.mvce_distance)
            << "\n";
    }
}

void write_be_curve_csv(const BeCurve &curve, const std::string &path)
{
    std::ofstream out = open_csv(path);
    out << "a,bloch_norm,mvce_distance\n";
    for (const BeCurveRow &row : curve.rows) {
        out << fmt(row.a) << "," << fmt(row.bloch_norm) << "," << fmt(row.mvce_distance) << "\n";
    }
}

void write_manifest(const RunManifest &manifest, const std::string &path)
{
    const nlohmann::json j = {{"experiment", manifest.experiment},
                              {"seed", manifest.seed},
                              {"dim_a", manifest.dim_a},
                              {"dim_b", manifest.dim_b},
                              {"norms", manifest.norms},
                              {"mvce_epsilon", manifest.mvce_epsilon},
                              {"dykstra_tol", manifest.dykstra_tol},
                              {"artifact_version", kArtifactVersion}};
    save_json(j, path);
}

} // namespace sepell
