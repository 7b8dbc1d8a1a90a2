#pragma once

#include <iosfwd>
#include <string>

#include "inconic/kernel.hpp"

namespace inconic {

/// Inputs of a CLI invocation: reference triangle, perspector and figure
/// rendering options. Defaults describe an acute integer triangle.
struct SceneSpec {
    TriangleRef triangle = default_triangle();
    HPoint perspector = HPoint(1, 2, 3);
    int figure_id = 1;
    std::string out_path;
    double stroke_width = 1.2;
    int conic_samples = 256;

    static TriangleRef default_triangle();
};

/// Parses "p:q:r" with integer or rational components ("1/2:3:-4").
/// Throws std::invalid_argument on malformed input or a zero triple.
HPoint parse_hpoint(const std::string& text);

/// Reads a triangle from JSON: {"A": ["0","0"], "B": [4, 0], "C": ["1","3"]}.
/// Coordinates may be rational strings or plain integers.
TriangleRef parse_triangle_file(const std::string& path);
TriangleRef parse_triangle_json(const std::string& json_text);

}  // namespace inconic
