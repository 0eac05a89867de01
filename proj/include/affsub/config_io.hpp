#ifndef AFFSUB_CONFIG_IO_HPP
#define AFFSUB_CONFIG_IO_HPP

#include "affsub/geometry.hpp"

#include <json.hpp>
#include <string>

namespace affsub {

/// {"d": int, "points": [[rational strings]], "ambient_dim"?: int, "spherical"?: bool}
/// Integers are accepted in place of rational strings. Errors name the field.
PointConfiguration configuration_from_json(const nlohmann::json& j);
PointConfiguration read_configuration_file(const std::string& path);
nlohmann::json configuration_to_json(const PointConfiguration& config);

Rational rational_from_json(const nlohmann::json& j, const std::string& field);
Vector vector_from_json(const nlohmann::json& j, const std::string& field);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);

} // namespace affsub

#endif
