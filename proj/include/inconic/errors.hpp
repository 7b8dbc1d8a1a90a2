#pragma once

#include <stdexcept>
#include <string>

namespace inconic {

/// Base class for all geometric failure modes. Every error below corresponds
/// to a well-defined degenerate configuration, never to a rounding artifact:
/// the exact layer has no rounding.
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

struct IdenticalPoints : GeometryError {
    IdenticalPoints() : GeometryError("join of projectively identical points") {}
};

struct IdenticalLines : GeometryError {
    IdenticalLines() : GeometryError("meet of projectively identical lines") {}
};

struct PointAtInfinity : GeometryError {
    PointAtInfinity() : GeometryError("affine operation on a point at infinity") {}
};

struct DegenerateTriangle : GeometryError {
    DegenerateTriangle() : GeometryError("triangle vertices are collinear") {}
};

struct DegeneratePerspector : GeometryError {
    DegeneratePerspector() : GeometryError("perspector lies on a side line") {}
};

struct DegenerateOrthic : GeometryError {
    DegenerateOrthic() : GeometryError("right triangle: orthic triangle degenerates") {}
};

struct NoValidPerspector : GeometryError {
    NoValidPerspector() : GeometryError("no inscribed conic has this center: anticomplement lies on a side line") {}
};

struct DegenerateConic : GeometryError {
    DegenerateConic() : GeometryError("conic matrix is singular") {}
};

struct CenterAtInfinity : GeometryError {
    CenterAtInfinity() : GeometryError("parabola: center is a point at infinity") {}
};

struct PointNotOnConic : GeometryError {
    PointNotOnConic() : GeometryError("tangent requested at a point not on the conic") {}
};

struct RankDeficient : GeometryError {
    RankDeficient() : GeometryError("point configuration does not determine a unique conic") {}
};

struct NotAnEllipse : GeometryError {
    NotAnEllipse() : GeometryError("operation requires an ellipse") {}
};

}  // namespace inconic
