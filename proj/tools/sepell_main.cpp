#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepell/bench.hpp"
#include "sepell/geometry.hpp"
#include "sepell/io.hpp"
#include "sepell/ppt_oracle.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInvalidState = 65;
constexpr int kExitDegenerate = 2;
constexpr int kExitNumerical = 3;

struct Dims {
    int a = 0;
    int b = 0;
};

// "AxB" with both factors >= 2.
Dims parse_dims(const std::string &text)
{
    const auto sep = text.find('x');
    if (sep == std::string::npos) {
        throw CLI::ValidationError("--dims", "expected the form AxB, e.g. 2x2");
    }
    Dims dims;
    try {
        dims.a = std::stoi(text.substr(0, sep));
        dims.b = std::stoi(text.substr(sep + 1));
    }
    catch (const std::exception &) {
        throw CLI::ValidationError("--dims", "expected integers in AxB");
    }
    if (dims.a < 2 || dims.b < 2) {
        throw CLI::ValidationError("--dims", "subsystem dimensions must be >= 2");
    }
    return dims;
}

std::uint64_t default_seed()
{
    if (const char *env = std::getenv("SEPELL_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 12345;
}

sepell::DensityOperator load_state(const std::string &path)
{
    return sepell::density_from_json(sepell::load_json(path));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Separability testing for bipartite quantum states via covering ellipsoids"};
    app.require_subcommand(1);

    // fit
    auto *fit = app.add_subcommand("fit", "Fit the canonical-ensemble MVCE and write it as JSON");
    std::string fit_dims = "2x2";
    double fit_norm = 0.5;
    double fit_epsilon = 1e-7;
    std::string fit_out = "model.json";
    fit->add_option("--dims", fit_dims, "Subsystem dimensions AxB");
    fit->add_option("--norm", fit_norm, "Target ensemble norm in (0,1]");
    fit->add_option("--epsilon", fit_epsilon, "MVCE certificate tolerance");
    fit->add_option("--out", fit_out, "Output model path");

    // classify
    auto *classify = app.add_subcommand("classify", "Classify a density operator against a model");
    std::string cls_model, cls_state;
    double cls_tol = -1.0;
    classify->add_option("--model", cls_model, "Model JSON from fit")->required();
    classify->add_option("--state", cls_state, "State JSON (dims + interleaved entries)")
        ->required();
    classify->add_option("--tol", cls_tol, "Membership tolerance (default: fit_epsilon)");

    // witness
    auto *witness = app.add_subcommand("witness", "Emit a tangent pseudo-witness for a state");
    std::string wit_model, wit_state, wit_out = "witness.json";
    witness->add_option("--model", wit_model, "Model JSON from fit")->required();
    witness->add_option("--state", wit_state, "State JSON")->required();
    witness->add_option("--out", wit_out, "Output witness path");

    // bench
    auto *bench = app.add_subcommand("bench", "Reproduce the benchmark experiments");
    bench->require_subcommand(1);
    std::string bench_dims = "2x2";
    std::vector<double> bench_norms;
    int bench_samples = 1000;
    int bench_count = 1000;
    double bench_norm = 0.5;
    std::uint64_t bench_seed = default_seed();
    std::string out_dir = ".";

    auto *confusion = bench->add_subcommand(
        "confusion", "False positive/negative counts versus ensemble norm");
    confusion->add_option("--dims", bench_dims, "Subsystem dimensions AxB");
    confusion->add_option("--norms", bench_norms, "Ensemble norms (default 0.1..1.0)");
    confusion->add_option("--samples", bench_samples, "Samples per class");
    confusion->add_option("--seed", bench_seed, "RNG seed");
    confusion->add_option("--out-dir", out_dir, "Output directory");

    auto *be_scan =
        bench->add_subcommand("be-scan", "Bound-entangled detection counts versus ensemble norm");
    be_scan->add_option("--norms", bench_norms, "Ensemble norms (default 0.1..1.0)");
    be_scan->add_option("--count", bench_count, "Number of Horodecki states");
    be_scan->add_option("--out-dir", out_dir, "Output directory");

    auto *dist_cmp = bench->add_subcommand(
        "distance-compare", "True Hilbert-Schmidt distance against MVCE distance");
    dist_cmp->add_option("--dims", bench_dims, "Subsystem dimensions AxB");
    dist_cmp->add_option("--count", bench_count, "Number of entangled samples");
    dist_cmp->add_option("--norm", bench_norm, "Ensemble norm");
    dist_cmp->add_option("--seed", bench_seed, "RNG seed");
    dist_cmp->add_option("--out-dir", out_dir, "Output directory");

    auto *be_curve =
        bench->add_subcommand("be-curve", "Bound-entangled distance versus Bloch norm");
    be_curve->add_option("--norm", bench_norm, "Ensemble norm");
    be_curve->add_option("--count", bench_count, "Number of Horodecki states");
    be_curve->add_option("--out-dir", out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*fit) {
            const Dims dims = parse_dims(fit_dims);
            const sepell::Ellipsoid e =
                sepell::fit_canonical_mvce(dims.a, dims.b, fit_norm, fit_epsilon);
            sepell::save_json(sepell::ellipsoid_to_json(e), fit_out);
            std::cout << "wrote " << fit_out << " (dim " << e.dim << ", "
                      << e.meta.solver_iterations << " iterations)\n";
            return 0;
        }

        if (*classify) {
            const sepell::Ellipsoid e =
                sepell::ellipsoid_from_json(sepell::load_json(cls_model));
            const sepell::DensityOperator rho = load_state(cls_state);
            try {
                sepell::validate_density_operator(rho);
            }
            catch (const std::invalid_argument &err) {
                std::cerr << "invalid state: " << err.what() << "\n";
                return kExitInvalidState;
            }
            const sepell::HermitianBasis basis = sepell::gell_mann_basis(rho.dim());
            const sepell::BlochVector r = sepell::vectorize(rho, basis);
            const double tol = cls_tol >= 0.0 ? cls_tol : e.fit_epsilon;
            const sepell::Label label = sepell::classify(e, r, tol);
            const auto projection = sepell::project_to_ellipsoid(e, r.components);
            std::cout << "label: "
                      << (label == sepell::Label::separable ? "separable" : "entangled") << "\n"
                      << "distance: " << projection.distance << "\n"
                      << "quadratic_form: " << sepell::quadratic_form(e, r.components) << "\n";
            return label == sepell::Label::separable ? 0 : 1;
        }

        if (*witness) {
            const sepell::Ellipsoid e =
                sepell::ellipsoid_from_json(sepell::load_json(wit_model));
            const sepell::DensityOperator rho = load_state(wit_state);
            try {
                sepell::validate_density_operator(rho);
            }
            catch (const std::invalid_argument &err) {
                std::cerr << "invalid state: " << err.what() << "\n";
                return kExitInvalidState;
            }
            const sepell::HermitianBasis basis = sepell::gell_mann_basis(rho.dim());
            const sepell::BlochVector r = sepell::vectorize(rho, basis);
            if (sepell::contains(e, r.components, e.fit_epsilon)) {
                std::cerr << "state is not strictly outside the ellipsoid; no witness\n";
                return 1;
            }
            const sepell::PseudoWitness w = sepell::tangent_witness(e, r.components, basis);
            sepell::save_json(sepell::witness_to_json(w), wit_out);
            std::cout << "wrote " << wit_out << "\n";
            return 0;
        }

        std::vector<double> norms = bench_norms;
        if (norms.empty()) {
            for (int i = 1; i <= 10; ++i) {
                norms.push_back(i / 10.0);
            }
        }
        sepell::RunManifest manifest;
        manifest.seed = bench_seed;
        manifest.norms = norms;

        if (*confusion) {
            const Dims dims = parse_dims(bench_dims);
            const auto rows = sepell::run_confusion_experiment(dims.a, dims.b, bench_samples,
                                                               norms, bench_seed);
            sepell::write_confusion_csv(rows, out_dir + "/confusion.csv");
            manifest.experiment = "confusion";
            manifest.dim_a = dims.a;
            manifest.dim_b = dims.b;
            sepell::write_manifest(manifest, out_dir + "/confusion_manifest.json");
            std::cout << "wrote " << out_dir << "/confusion.csv\n";
        }
        else if (*be_scan) {
            const auto rows = sepell::run_be_detection(norms, bench_count);
            sepell::write_be_detection_csv(rows, out_dir + "/be_scan.csv");
            manifest.experiment = "be-scan";
            manifest.dim_a = 3;
            manifest.dim_b = 3;
            sepell::write_manifest(manifest, out_dir + "/be_scan_manifest.json");
            std::cout << "wrote " << out_dir << "/be_scan.csv\n";
        }
        else if (*dist_cmp) {
            const Dims dims = parse_dims(bench_dims);
            const auto rows = sepell::run_distance_comparison(dims.a, dims.b, bench_count,
                                                              bench_norm, bench_seed);
            sepell::write_distance_comparison_csv(rows, out_dir + "/distance_compare.csv");
            manifest.experiment = "distance-compare";
            manifest.dim_a = dims.a;
            manifest.dim_b = dims.b;
            manifest.norms = {bench_norm};
            sepell::write_manifest(manifest, out_dir + "/distance_compare_manifest.json");
            std::cout << "wrote " << out_dir << "/distance_compare.csv\n";
        }
        else if (*be_curve) {
            const auto curve = sepell::run_be_norm_distance(bench_norm, bench_count);
            sepell::write_be_curve_csv(curve, out_dir + "/be_curve.csv");
            manifest.experiment = "be-curve";
            manifest.dim_a = 3;
            manifest.dim_b = 3;
            manifest.norms = {bench_norm};
            sepell::write_manifest(manifest, out_dir + "/be_curve_manifest.json");
            std::cout << "wrote " << out_dir << "/be_curve.csv (R^2 " << curve.r_squared << ")\n";
        }
        return 0;
    }
    catch (const CLI::ValidationError &err) {
        std::cerr << err.what() << "\n";
        return kExitUsage;
    }
    catch (const sepell::DegenerateInputError &err) {
        std::cerr << err.what() << "\n";
        return kExitDegenerate;
    }
    catch (const sepell::NumericalFailureError &err) {
        std::cerr << err.what() << "\n";
        return kExitNumerical;
    }
    catch (const std::exception &err) {
        std::cerr << err.what() << "\n";
        return 1;
    }
}
