#include "sepell/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace sepell {

namespace {

std::vector<double> matrix_to_flat(const RMat &m)
{
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            flat.push_back(m(i, j));
        }
    }
    return flat;
}

std::vector<double> cmatrix_to_interleaved(const CMat &m)
{
    std::vector<double> flat;
    flat.reserve(2 * static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            flat.push_back(m(i, j).real());
            flat.push_back(m(i, j).imag());
        }
    }
    return flat;
}

CMat interleaved_to_cmatrix(const std::vector<double> &flat, Eigen::Index n)
{
    if (flat.size() != static_cast<std::size_t>(2 * n * n)) {
        throw std::invalid_argument("complex matrix payload has wrong length");
    }
    CMat m(n, n);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = Complex(flat[k], flat[k + 1]);
            k += 2;
        }
    }
    return m;
}

RVec array_to_vector(const nlohmann::json &j)
{
    std::vector<double> data = j.get<std::vector<double>>();
    return Eigen::Map<RVec>(data.data(), static_cast<Eigen::Index>(data.size()));
}

} // namespace

nlohmann::json ellipsoid_to_json(const Ellipsoid &e)
{
    return {{"dim", e.dim},
            {"shape", matrix_to_flat(e.shape)},
            {"center", std::vector<double>(e.center.data(), e.center.data() + e.center.size())},
            {"fit_epsilon", e.fit_epsilon},
            {"meta",
             {{"dim_a", e.meta.dim_a},
              {"dim_b", e.meta.dim_b},
              {"target_norm", e.meta.target_norm},
              {"basis_tag", e.meta.basis_tag},
              {"solver_iterations", e.meta.solver_iterations},
              {"ridge", e.meta.ridge},
              {"certificate_gap", e.meta.certificate_gap}}}};
}

Ellipsoid ellipsoid_from_json(const nlohmann::json &j)
{
    Ellipsoid e;
    e.dim = j.at("dim").get<int>();
    const std::vector<double> flat = j.at("shape").get<std::vector<double>>();
    if (flat.size() != static_cast<std::size_t>(e.dim) * e.dim) {
        throw std::invalid_argument("ellipsoid shape payload has wrong length");
    }
    e.shape.resize(e.dim, e.dim);
    for (int i = 0; i < e.dim; ++i) {
        for (int k = 0; k < e.dim; ++k) {
            e.shape(i, k) = flat[static_cast<std::size_t>(i) * e.dim + k];
        }
    }
    e.center = array_to_vector(j.at("center"));
    if (e.center.size() != e.dim) {
        throw std::invalid_argument("ellipsoid center payload has wrong length");
    }
    e.fit_epsilon = j.at("fit_epsilon").get<double>();
    const nlohmann::json &meta = j.at("meta");
    e.meta.dim_a = meta.at("dim_a").get<int>();
    e.meta.dim_b = meta.at("dim_b").get<int>();
    e.meta.target_norm = meta.at("target_norm").get<double>();
    e.meta.basis_tag = meta.at("basis_tag").get<std::string>();
    e.meta.solver_iterations = meta.at("solver_iterations").get<long>();
    e.meta.ridge = meta.value("ridge", false);
    e.meta.certificate_gap = meta.value("certificate_gap", 0.0);
    return e;
}

nlohmann::json density_to_json(const DensityOperator &rho)
{
    return {{"dim_a", rho.dim_a},
            {"dim_b", rho.dim_b},
            {"matrix", cmatrix_to_interleaved(rho.matrix)}};
}

DensityOperator density_from_json(const nlohmann::json &j)
{
    DensityOperator rho;
    rho.dim_a = j.at("dim_a").get<int>();
    rho.dim_b = j.at("dim_b").get<int>();
    if (rho.dim_a < 1 || rho.dim_b < 1) {
        throw std::invalid_argument("density operator: invalid dims");
    }
    rho.matrix =
        interleaved_to_cmatrix(j.at("matrix").get<std::vector<double>>(), rho.dim());
    return rho;
}

nlohmann::json witness_to_json(const PseudoWitness &w)
{
    return {{"normal", std::vector<double>(w.normal.data(), w.normal.data() + w.normal.size())},
            {"offset", w.offset},
            {"matrix_form", cmatrix_to_interleaved(w.matrix_form)},
            {"foot", std::vector<double>(w.foot.data(), w.foot.data() + w.foot.size())}};
}

PseudoWitness witness_from_json(const nlohmann::json &j)
{
    PseudoWitness w;
    w.normal = array_to_vector(j.at("normal"));
    w.offset = j.at("offset").get<double>();
    const std::vector<double> flat = j.at("matrix_form").get<std::vector<double>>();
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(flat.size() / 2.0)));
    w.matrix_form = interleaved_to_cmatrix(flat, n);
    w.foot = array_to_vector(j.at("foot"));
    return w;
}

nlohmann::json ensemble_to_json(const SeparableEnsemble &ensemble)
{
    nlohmann::json vectors = nlohmann::json::array();
    for (const BlochVector &v : ensemble.vectors) {
        vectors.push_back(
            std::vector<double>(v.components.data(), v.components.data() + v.components.size()));
    }
    return {{"dim_a", ensemble.dim_a},
            {"dim_b", ensemble.dim_b},
            {"target_norm", ensemble.target_norm},
            {"basis_tag", "gell-mann-alpha2"},
            {"vectors", vectors}};
}

SeparableEnsemble ensemble_from_json(const nlohmann::json &j)
{
    SeparableEnsemble ensemble;
    ensemble.dim_a = j.at("dim_a").get<int>();
    ensemble.dim_b = j.at("dim_b").get<int>();
    ensemble.target_norm = j.at("target_norm").get<double>();
    const int dim = ensemble.dim_a * ensemble.dim_b;
    for (const nlohmann::json &row : j.at("vectors")) {
        BlochVector v;
        v.dim = dim;
        v.components = array_to_vector(row);
        ensemble.vectors.push_back(std::move(v));
    }
    return ensemble;
}

void save_json(const nlohmann::json &j, const std::string &path)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    out << j.dump(2) << "\n";
}

nlohmann::json load_json(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path);
    }
    nlohmann::json j;
    in >> j;
    return j;
}

} // namespace sepell
