#include "affsub/config_io.hpp"

#include "affsub/errors.hpp"

#include <fstream>

namespace affsub {

Rational rational_from_json(const nlohmann::json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InputError(field + ": expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const InputError& e) {
        throw InputError(field + ": " + e.what());
    }
}

Vector vector_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array()) throw InputError(field + ": expected an array");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw InputError(field + ": expected a nonempty array of rows");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    const std::size_t cols = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != cols) throw InputError(field + "[" + std::to_string(i) + "]: ragged row");
    return Matrix::from_rows(cols, rows);
}

nlohmann::json to_json(const Vector& v) {
    auto out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

nlohmann::json to_json(const Matrix& m) {
    auto out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

PointConfiguration configuration_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("configuration: expected a JSON object");
    if (!j.contains("d")) throw InputError("d: missing field");
    if (!j["d"].is_number_integer() || j["d"].get<long long>() < 1) throw InputError("d: expected a positive integer");
    const auto d = static_cast<std::size_t>(j["d"].get<long long>());
    if (!j.contains("points")) throw InputError("points: missing field");
    const auto& pts = j["points"];
    if (!pts.is_array()) throw InputError("points: expected an array");
    if (pts.size() != d + 2)
        throw InputError("points: expected d+2 = " + std::to_string(d + 2) + " points, got " + std::to_string(pts.size()));
    std::vector<Vector> points;
    for (std::size_t i = 0; i < pts.size(); ++i) points.push_back(vector_from_json(pts[i], "points[" + std::to_string(i) + "]"));

    if (j.contains("ambient_dim")) {
        const auto& a = j["ambient_dim"];
        if (!a.is_number_integer() || a.get<long long>() < 1) throw InputError("ambient_dim: expected a positive integer");
        const auto n = static_cast<std::size_t>(a.get<long long>());
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i].size() != n)
                throw InputError("points[" + std::to_string(i) + "]: expected ambient_dim = " + std::to_string(n) +
                                 " coordinates");
    }
    bool spherical = false;
    if (j.contains("spherical")) {
        if (!j["spherical"].is_boolean()) throw InputError("spherical: expected a boolean");
        spherical = j["spherical"].get<bool>();
    }
    return PointConfiguration(d, std::move(points), spherical);
}

PointConfiguration read_configuration_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("input: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("input: invalid JSON in '" + path + "': " + e.what());
    }
    return configuration_from_json(j);
}

nlohmann::json configuration_to_json(const PointConfiguration& config) {
    nlohmann::json j;
    j["d"] = config.intrinsic_dim();
    j["ambient_dim"] = config.ambient_dim();
    auto pts = nlohmann::json::array();
    for (const auto& p : config.points()) pts.push_back(to_json(p));
    j["points"] = pts;
    if (config.spherical()) j["spherical"] = true;
    return j;
}

} // namespace affsub
