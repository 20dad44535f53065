#pragma once

#include <string>

#include <json.hpp>

#include "sepell/ensembles.hpp"
#include "sepell/geometry.hpp"
#include "sepell/mvce.hpp"

namespace sepell {

inline constexpr const char *kArtifactVersion = "0.1.0";

// Complex matrices are stored as interleaved real/imag row-major arrays.

nlohmann::json ellipsoid_to_json(const Ellipsoid &e);
Ellipsoid ellipsoid_from_json(const nlohmann::json &j);

nlohmann::json density_to_json(const DensityOperator &rho);
DensityOperator density_from_json(const nlohmann::json &j);

nlohmann::json witness_to_json(const PseudoWitness &w);
PseudoWitness witness_from_json(const nlohmann::json &j);

nlohmann::json ensemble_to_json(const SeparableEnsemble &ensemble);
SeparableEnsemble ensemble_from_json(const nlohmann::json &j);

void save_json(const nlohmann::json &j, const std::string &path);
nlohmann::json load_json(const std::string &path);

} // namespace sepell
