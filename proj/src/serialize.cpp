#include "emw/serialize.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace emw {

namespace {

double require_number(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number())
        throw ValidationError(std::string("missing or non-numeric field '") + key + "'");
    return j[key].get<double>();
}

int require_int(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw ValidationError(std::string("missing or non-integer field '") + key + "'");
    return j[key].get<int>();
}

const json& require_array(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array())
        throw ValidationError(std::string("missing or non-array field '") + key + "'");
    return j[key];
}

complexd read_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Vector3c read_vec3(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ValidationError("vector entries must have 3 components");
    Vector3c v;
    for (int m = 0; m < 3; ++m) v(m) = read_complex(j[m]);
    return v;
}

json write_vec3(const Vector3c& v) {
    json out = json::array();
    for (int m = 0; m < 3; ++m)
        out.push_back({v(m).real(), v(m).imag()});
    return out;
}

}  // namespace

json cone_grid_to_json(const ConeQuadrature& q) {
    return {{"radial", q.radial_count},
            {"angular", q.angular_count},
            {"omega_max", q.omega_max},
            {"scale_hint", q.scale_hint}};
}

std::shared_ptr<const ConeQuadrature> cone_grid_from_json(const json& j) {
    const int radial = require_int(j, "radial");
    const int angular = require_int(j, "angular");
    const double omega_max = require_number(j, "omega_max");
    const double scale_hint = require_number(j, "scale_hint");
    try {
        return std::make_shared<ConeQuadrature>(
            build_cone_quadrature(radial, angular, omega_max, scale_hint));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

json euclidean_grid_to_json(const EuclideanGrid& g) {
    return {{"half_width", g.half_width}, {"nx", g.nx},
            {"s_min", g.s_min},           {"s_max", g.s_max},
            {"s_count", g.s_count_per_sign},
            {"profile_scale", g.profile_scale}};
}

std::shared_ptr<const EuclideanGrid> euclidean_grid_from_json(const json& j) {
    const double half_width = require_number(j, "half_width");
    const int nx = require_int(j, "nx");
    const double s_min = require_number(j, "s_min");
    const double s_max = require_number(j, "s_max");
    const int s_count = require_int(j, "s_count");
    const double profile_scale = require_number(j, "profile_scale");
    try {
        return std::make_shared<EuclideanGrid>(build_euclidean_grid(
            half_width, nx, s_min, s_max, s_count, profile_scale));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

std::string grid_hash(const json& grid_manifest) {
    // FNV-1a 64 over the canonical (key-sorted) dump.
    const std::string text = grid_manifest.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

json coefficients_to_json(const ConeCoefficients& f) {
    json entries = json::array();
    const ConeQuadrature& q = *f.quadrature;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const LightConeMomentum& p = q.nodes[i];
        entries.push_back(
            {{"p", {p.p1, p.p2, p.p3, p.p0}}, {"f", write_vec3(f.values[i])}});
    }
    return {{"grid", cone_grid_to_json(q)},
            {"projected", f.projected},
            {"entries", entries}};
}

ConeCoefficients coefficients_from_json(const json& j) {
    auto quad = cone_grid_from_json(
        j.is_object() && j.contains("grid") ? j["grid"] : json());
    if (!j.contains("projected") || !j["projected"].is_boolean())
        throw ValidationError("missing or non-boolean field 'projected'");
    const json& entries = require_array(j, "entries");
    if (entries.size() != quad->size())
        throw ValidationError("entry count does not match the declared grid");

    ConeCoefficients f;
    f.quadrature = quad;
    f.projected = j["projected"].get<bool>();
    f.values.resize(quad->size());
    const double tol = 1e-12 * std::max(1.0, quad->omega_max);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json& e = entries[i];
        const json& pj = require_array(e, "p");
        if (pj.size() != 4) throw ValidationError("momentum entries must have 4 components");
        for (int m = 0; m < 4; ++m)
            if (!pj[m].is_number()) throw ValidationError("momentum components must be numeric");
        const LightConeMomentum& p = quad->nodes[i];
        const double d1 = pj[0].get<double>() - p.p1;
        const double d2 = pj[1].get<double>() - p.p2;
        const double d3 = pj[2].get<double>() - p.p3;
        const double d0 = pj[3].get<double>() - p.p0;
        if (std::sqrt(d1 * d1 + d2 * d2 + d3 * d3 + d0 * d0) > tol)
            throw ValidationError("entry momentum does not match the declared grid node");
        if (!e.contains("f")) throw ValidationError("entry missing field 'f'");
        f.values[i] = read_vec3(e["f"]);
    }
    return f;
}

json samples_to_json(const EuclideanSamples& phi) {
    const json grid = euclidean_grid_to_json(*phi.grid);
    json values = json::array();
    for (const Vector3c& v : phi.values) values.push_back(write_vec3(v));
    return {{"grid", grid}, {"grid_hash", grid_hash(grid)}, {"values", values}};
}

EuclideanSamples samples_from_json(const json& j) {
    auto grid = euclidean_grid_from_json(
        j.is_object() && j.contains("grid") ? j["grid"] : json());
    if (!j.contains("grid_hash") || !j["grid_hash"].is_string())
        throw ValidationError("missing or non-string field 'grid_hash'");
    const std::string expect = grid_hash(euclidean_grid_to_json(*grid));
    if (j["grid_hash"].get<std::string>() != expect)
        throw ValidationError("grid_hash does not match the declared grid");
    const json& values = require_array(j, "values");
    if (values.size() != grid->size())
        throw ValidationError("value count does not match the declared grid");

    EuclideanSamples phi;
    phi.grid = grid;
    phi.values.resize(values.size());
    for (std::size_t i = 0; i < phi.values.size(); ++i)
        phi.values[i] = read_vec3(values[i]);
    return phi;
}

json probes_to_json(const std::vector<FourVector>& pts) {
    json points = json::array();
    for (const FourVector& x : pts) points.push_back({x.x1, x.x2, x.x3, x.x0});
    return {{"points", points}};
}

std::vector<FourVector> probes_from_json(const json& j) {
    const json& points = require_array(j, "points");
    std::vector<FourVector> out;
    out.reserve(points.size());
    for (const json& p : points) {
        if (!p.is_array() || p.size() != 4)
            throw ValidationError("probe points must have 4 components");
        for (int m = 0; m < 4; ++m)
            if (!p[m].is_number()) throw ValidationError("probe components must be numeric");
        out.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>(),
                       p[3].get<double>()});
    }
    return out;
}

json label_set_to_json(const LabelSet& set) {
    json labels = json::array();
    for (const TubePoint& z : set.labels) {
        labels.push_back(
            {{"x", {z.x.x1, z.x.x2, z.x.x3, z.x.x0}},
             {"y", {z.y.y.x1, z.y.y.x2, z.y.y.x3, z.y.y.x0}}});
    }
    return {{"labels", labels}, {"weights", set.weights}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out << j.dump(2) << "\n";
    if (!out) throw std::ios_base::failure("failed writing output file: " + path);
}

}  // namespace emw
