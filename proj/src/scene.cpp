#include "inconic/scene.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace inconic {

TriangleRef SceneSpec::default_triangle() {
    return TriangleRef({Scalar(0), Scalar(0)}, {Scalar(4), Scalar(0)}, {Scalar(1), Scalar(3)});
}

HPoint parse_hpoint(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    if (parts.size() != 3)
        throw std::invalid_argument("expected three ':'-separated coordinates: " + text);
    return HPoint(parse_scalar(parts[0]), parse_scalar(parts[1]), parse_scalar(parts[2]));
}

namespace {

Scalar scalar_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<std::int64_t>()));
    throw std::invalid_argument("coordinates must be integers or rational strings");
}

Vec2 vec_from_json(const nlohmann::json& v) {
    if (!v.is_array() || v.size() != 2)
        throw std::invalid_argument("each vertex must be a [x, y] pair");
    return {scalar_from_json(v[0]), scalar_from_json(v[1])};
}

}  // namespace

TriangleRef parse_triangle_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("triangle JSON: ") + e.what());
    }
    for (const char* key : {"A", "B", "C"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("triangle JSON missing vertex ") + key);
    return TriangleRef(vec_from_json(doc["A"]), vec_from_json(doc["B"]), vec_from_json(doc["C"]));
}

TriangleRef parse_triangle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open triangle file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_triangle_json(buf.str());
}

}  // namespace inconic
