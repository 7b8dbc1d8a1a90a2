#pragma once

#include <array>

#include "inconic/kernel.hpp"

namespace inconic {

/// Triangle sides, named by the vertices they span. The opposite vertex of
/// BC is A, and so on.
enum class Side { BC, CA, AB };

constexpr std::array<Side, 3> all_sides = {Side::BC, Side::CA, Side::AB};

HLine side_line(Side s);       // BC is x = 0, CA is y = 0, AB is z = 0
HPoint side_midpoint(Side s);  // (0:1:1), (1:0:1), (1:1:0)
HPoint opposite_vertex(Side s);
HPoint vertex_point(int i);  // A, B, C for i = 0, 1, 2

inline HPoint centroid() { return HPoint(1, 1, 1); }

/// Feet of the cevians through p, i.e. the meets of Ap, Bp, Cp with the
/// opposite sides: (0:q:r), (p:0:r), (p:q:0), indexed by Side order.
std::array<HPoint, 3> cevian_feet(const HPoint& p);  // throws DegeneratePerspector

/// (p:q:r) -> (qr:rp:pq), an involution on points off the side lines.
HPoint isotomic_conjugate(const HPoint& p);  // throws DegeneratePerspector

/// Image of the homothety centered at the centroid with ratio -1/2:
/// (p:q:r) -> (q+r : r+p : p+q). anticomplement is the exact inverse.
HPoint complement(const HPoint& p);      // throws PointAtInfinity
HPoint anticomplement(const HPoint& p);  // throws PointAtInfinity

/// Orthocenter in exact barycentrics. For a right triangle this is the
/// right-angle vertex (allowed; TriangleRef::right() flags it).
HPoint orthocenter(const TriangleRef& t);

/// Altitude of the triangle through the vertex opposite `s`, as an exact
/// barycentric line.
HLine altitude_line(const TriangleRef& t, Side s);

/// Feet of the three altitudes, equal to cevian_feet(orthocenter).
std::array<HPoint, 3> altitude_feet(const TriangleRef& t);  // throws DegenerateOrthic

/// Lemoine (symmedian) point, (a2 : b2 : c2).
HPoint symmedian_point(const TriangleRef& t);

/// Midpoints of the orthic triangle's sides; element i is the midpoint of
/// the orthic side not containing the foot on side i, so it lies on the
/// symmedian from the opposite vertex.
std::array<HPoint, 3> orthic_midpoints(const TriangleRef& t);  // throws DegenerateOrthic

/// Circumcenter, computed exactly in the Cartesian layer.
Vec2 circumcenter(const TriangleRef& t);

/// Tangent to the circumcircle at the vertex opposite `s`; antiparallel to s.
HLine circumcircle_tangent(const TriangleRef& t, Side s);

/// Line through p antiparallel to side s: the parallel through p to the
/// circumcircle tangent at the opposite vertex.
HLine antiparallel_through(const TriangleRef& t, const HPoint& p, Side s);

/// Inverse of the inconic-center map: isotomic_conjugate(anticomplement(o)).
HPoint perspector_from_center(const HPoint& o);  // throws NoValidPerspector

/// Synthetic constructions mirroring the classical definitions. Each agrees
/// exactly with the closed-form operation above; the verification suite and
/// the tests exercise both routes against each other.
namespace synthetic {

std::array<HPoint, 3> cevian_feet(const HPoint& p);
HPoint isotomic_conjugate(const HPoint& p);
/// The point x with vector Gx = -1/2 * Gp in normalized coordinates.
HPoint complement(const HPoint& p);
/// Meet of two altitudes (the third is asserted incident by the tests).
HPoint orthocenter(const TriangleRef& t);
/// Perpendicular feet computed by Cartesian projection.
std::array<HPoint, 3> altitude_feet(const TriangleRef& t);
/// Meet of the lines joining the vertices to the orthic-side midpoints.
HPoint symmedian_point(const TriangleRef& t);  // throws DegenerateOrthic

}  // namespace synthetic

}  // namespace inconic
