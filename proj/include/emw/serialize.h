#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "emw/coefficients.h"
#include "emw/conformal.h"
#include "emw/euclidean.h"

namespace emw {

using json = nlohmann::json;

// Thrown on malformed or inconsistent input files; the CLI maps it to exit 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cone grid manifest {"radial","angular","omega_max","scale_hint"}.
json cone_grid_to_json(const ConeQuadrature& q);
std::shared_ptr<const ConeQuadrature> cone_grid_from_json(const json& j);

// Euclidean grid spec {"half_width","nx","s_min","s_max","s_count","profile_scale"}.
json euclidean_grid_to_json(const EuclideanGrid& g);
std::shared_ptr<const EuclideanGrid> euclidean_grid_from_json(const json& j);

// FNV-1a over the canonical grid JSON; guards against mixing objects built on
// different grids.
std::string grid_hash(const json& grid_manifest);

// Coefficient file: {"grid": manifest, "projected": bool,
//   "entries": [{"p":[p1,p2,p3,p0], "f":[[re,im] x3]}, ...]}.
// Reading validates every entry's p against the rebuilt grid nodes.
json coefficients_to_json(const ConeCoefficients& f);
ConeCoefficients coefficients_from_json(const json& j);

// Sample file: {"grid": spec, "grid_hash": h, "values": [[[re,im] x3], ...]}.
json samples_to_json(const EuclideanSamples& phi);
EuclideanSamples samples_from_json(const json& j);

// {"points": [[x1,x2,x3,x0], ...]}.
json probes_to_json(const std::vector<FourVector>& pts);
std::vector<FourVector> probes_from_json(const json& j);

json label_set_to_json(const LabelSet& set);

json load_json_file(const std::string& path);        // ValidationError on parse failure
void write_json_file(const std::string& path, const json& j);  // I/O errors throw std::ios_base::failure

}  // namespace emw
