#include "inconic/centers.hpp"

namespace inconic {

HLine side_line(Side s) {
    switch (s) {
        case Side::BC: return HLine(1, 0, 0);
        case Side::CA: return HLine(0, 1, 0);
        default: return HLine(0, 0, 1);
    }
}

HPoint side_midpoint(Side s) {
    switch (s) {
        case Side::BC: return HPoint(0, 1, 1);
        case Side::CA: return HPoint(1, 0, 1);
        default: return HPoint(1, 1, 0);
    }
}

HPoint opposite_vertex(Side s) {
    switch (s) {
        case Side::BC: return HPoint(1, 0, 0);
        case Side::CA: return HPoint(0, 1, 0);
        default: return HPoint(0, 0, 1);
    }
}

HPoint vertex_point(int i) {
    return HPoint(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
}

namespace {

void require_off_side_lines(const HPoint& p) {
    if (sgn(p.x()) == 0 || sgn(p.y()) == 0 || sgn(p.z()) == 0) throw DegeneratePerspector();
}

}  // namespace

std::array<HPoint, 3> cevian_feet(const HPoint& p) {
    require_off_side_lines(p);
    Scalar x(p.x()), y(p.y()), z(p.z());
    return {HPoint(Scalar(0), y, z), HPoint(x, Scalar(0), z), HPoint(x, y, Scalar(0))};
}

HPoint isotomic_conjugate(const HPoint& p) {
    require_off_side_lines(p);
    return HPoint(Scalar(p.y() * p.z()), Scalar(p.z() * p.x()), Scalar(p.x() * p.y()));
}

HPoint complement(const HPoint& p) {
    if (p.is_infinite()) throw PointAtInfinity();
    return HPoint(Scalar(p.y() + p.z()), Scalar(p.z() + p.x()), Scalar(p.x() + p.y()));
}

HPoint anticomplement(const HPoint& p) {
    if (p.is_infinite()) throw PointAtInfinity();
    return HPoint(Scalar(p.y() + p.z() - p.x()), Scalar(p.z() + p.x() - p.y()),
                  Scalar(p.x() + p.y() - p.z()));
}

HPoint orthocenter(const TriangleRef& t) {
    // (1/s_a : 1/s_b : 1/s_c) with zero half-sums handled by clearing
    // denominators: (s_b*s_c : s_c*s_a : s_a*s_b).
    Scalar sa = t.s_a(), sb = t.s_b(), sc = t.s_c();
    return HPoint(sb * sc, sc * sa, sa * sb);
}

HLine altitude_line(const TriangleRef& t, Side s) {
    Vec2 v, d;
    switch (s) {
        case Side::BC: v = t.A(); d = t.C() - t.B(); break;
        case Side::CA: v = t.B(); d = t.A() - t.C(); break;
        default: v = t.C(); d = t.B() - t.A(); break;
    }
    return join(t.to_barycentric(v), t.to_barycentric(v + perp(d)));
}

std::array<HPoint, 3> altitude_feet(const TriangleRef& t) {
    if (t.right()) throw DegenerateOrthic();
    return cevian_feet(orthocenter(t));
}

HPoint symmedian_point(const TriangleRef& t) { return HPoint(t.a2(), t.b2(), t.c2()); }

std::array<HPoint, 3> orthic_midpoints(const TriangleRef& t) {
    auto feet = altitude_feet(t);
    return {midpoint(feet[1], feet[2]), midpoint(feet[2], feet[0]), midpoint(feet[0], feet[1])};
}

Vec2 circumcenter(const TriangleRef& t) {
    // Meet of the perpendicular bisectors of AB and AC, solved directly.
    Vec2 ab = t.B() - t.A(), ac = t.C() - t.A();
    Scalar nb = norm2(ab), nc = norm2(ac);
    Scalar den = 2 * cross(ab, ac);
    Scalar ux = (ac.y * nb - ab.y * nc) / den;
    Scalar uy = (ab.x * nc - ac.x * nb) / den;
    return t.A() + Vec2(ux, uy);
}

HLine circumcircle_tangent(const TriangleRef& t, Side s) {
    Vec2 o = circumcenter(t);
    Vec2 v;
    switch (s) {
        case Side::BC: v = t.A(); break;
        case Side::CA: v = t.B(); break;
        default: v = t.C(); break;
    }
    return join(t.to_barycentric(v), t.to_barycentric(v + perp(v - o)));
}

HLine antiparallel_through(const TriangleRef& t, const HPoint& p, Side s) {
    return parallel_through(p, circumcircle_tangent(t, s));
}

HPoint perspector_from_center(const HPoint& o) {
    HPoint ac = anticomplement(o);
    if (sgn(ac.x()) == 0 || sgn(ac.y()) == 0 || sgn(ac.z()) == 0) throw NoValidPerspector();
    return isotomic_conjugate(ac);
}

namespace synthetic {

std::array<HPoint, 3> cevian_feet(const HPoint& p) {
    require_off_side_lines(p);
    std::array<HPoint, 3> feet = {
        meet(join(opposite_vertex(Side::BC), p), side_line(Side::BC)),
        meet(join(opposite_vertex(Side::CA), p), side_line(Side::CA)),
        meet(join(opposite_vertex(Side::AB), p), side_line(Side::AB))};
    return feet;
}

HPoint isotomic_conjugate(const HPoint& p) {
    auto feet = synthetic::cevian_feet(p);
    // Cevians through the reflections of the feet in the side midpoints.
    HLine la = join(opposite_vertex(Side::BC), reflect(feet[0], side_midpoint(Side::BC)));
    HLine lb = join(opposite_vertex(Side::CA), reflect(feet[1], side_midpoint(Side::CA)));
    HLine lc = join(opposite_vertex(Side::AB), reflect(feet[2], side_midpoint(Side::AB)));
    HPoint iso = meet(la, lb);
    if (!incident(iso, lc)) throw GeometryError("isotomic cevians failed to concur");
    return iso;
}

HPoint complement(const HPoint& p) {
    auto g = normalize(centroid());
    auto n = normalize(p);
    // x = g - (p - g)/2
    return HPoint(g[0] - (n[0] - g[0]) / 2, g[1] - (n[1] - g[1]) / 2, g[2] - (n[2] - g[2]) / 2);
}

HPoint orthocenter(const TriangleRef& t) {
    return meet(altitude_line(t, Side::BC), altitude_line(t, Side::CA));
}

std::array<HPoint, 3> altitude_feet(const TriangleRef& t) {
    auto foot = [&t](const Vec2& v, const Vec2& base, const Vec2& dir) {
        Vec2 f = base + (dot(v - base, dir) / norm2(dir)) * dir;
        return t.to_barycentric(f);
    };
    return {foot(t.A(), t.B(), t.C() - t.B()), foot(t.B(), t.C(), t.A() - t.C()),
            foot(t.C(), t.A(), t.B() - t.A())};
}

HPoint symmedian_point(const TriangleRef& t) {
    auto mids = orthic_midpoints(t);
    HLine la = join(opposite_vertex(Side::BC), mids[0]);
    HLine lb = join(opposite_vertex(Side::CA), mids[1]);
    HLine lc = join(opposite_vertex(Side::AB), mids[2]);
    HPoint k = meet(la, lb);
    if (!incident(k, lc)) throw GeometryError("orthic-midpoint cevians failed to concur");
    return k;
}

}  // namespace synthetic

}  // namespace inconic
