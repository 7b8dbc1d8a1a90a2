#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inconic/conic.hpp"
#include "inconic/verify.hpp"

using namespace inconic;

namespace {

TriangleRef tri_4_1_3() {
    return TriangleRef({Scalar(0), Scalar(0)}, {Scalar(4), Scalar(0)}, {Scalar(1), Scalar(3)});
}

TriangleRef tri_13_14_15() {
    return TriangleRef({Scalar(0), Scalar(0)}, {Scalar(14), Scalar(0)}, {Scalar(5), Scalar(12)});
}

Conic steiner_inellipse() { return inconic_from_perspector(HPoint(1, 1, 1)); }

/// Closed-form inconic matrix, derived once from the tangency constraints;
/// serves as the independent oracle for the linear-system construction.
Conic inconic_closed_form(const HPoint& p) {
    Scalar x(p.x()), y(p.y()), z(p.z());
    return Conic({y * y * z * z, -x * y * z * z, -x * y * y * z, x * x * z * z, -x * x * y * z,
                  x * x * y * y});
}

}  // namespace

TEST_CASE("steiner inellipse from the tangency system") {
    Conic c = steiner_inellipse();
    // x^2+y^2+z^2-2xy-2yz-2zx = 0, tangent to the sides at their midpoints.
    CHECK(c == Conic({Scalar(1), Scalar(-1), Scalar(-1), Scalar(1), Scalar(-1), Scalar(1)}));
    for (Side s : all_sides) {
        CHECK(is_tangent_line(c, side_line(s)));
        CHECK(on_conic(c, side_midpoint(s)));
        CHECK(tangent_at(c, side_midpoint(s)) == side_line(s));
    }
    CHECK(conic_center(c) == HPoint(1, 1, 1));
    CHECK(classify(c) == ConicClass::Ellipse);
    CHECK_FALSE(on_conic(c, HPoint(1, 0, 0)));
}

TEST_CASE("inconic construction matches the closed form") {
    Rng rng(61);
    for (int i = 0; i < 300; ++i) {
        HPoint p = sample_perspector(rng);
        CHECK(inconic_from_perspector(p) == inconic_closed_form(p));
    }
    CHECK_THROWS_AS(inconic_from_perspector(HPoint(1, 0, 0)), DegeneratePerspector);
}

TEST_CASE("orthic conic touches at the altitude feet") {
    TriangleRef t = tri_4_1_3();
    Conic orthic = inconic_from_perspector(orthocenter(t));
    auto feet = altitude_feet(t);
    auto contacts = inconic_contacts(orthic);
    for (int s = 0; s < 3; ++s) CHECK(contacts[s] == feet[s]);
    CHECK(conic_center(orthic) == HPoint(9, 5, 8));  // Theorem 1 on this triangle
}

TEST_CASE("gergonne inconic is the incircle") {
    // Exact oracle on the Heronian triangle: contacts are the perpendicular
    // feet from the incenter, all at squared distance r^2 = (area/s)^2 = 16.
    TriangleRef t = tri_13_14_15();
    HPoint incenter(15, 13, 14);
    HPoint gergonne(28, 21, 24);
    Conic incircle = inconic_from_perspector(gergonne);
    auto contacts = inconic_contacts(incircle);
    Vec2 ic = t.to_cartesian(incenter);
    std::array<std::pair<Vec2, Vec2>, 3> sides = {{{t.B(), t.C() - t.B()},
                                                   {t.C(), t.A() - t.C()},
                                                   {t.A(), t.B() - t.A()}}};
    for (int s = 0; s < 3; ++s) {
        const auto& [base, dir] = sides[s];
        Vec2 foot = base + (dot(ic - base, dir) / norm2(dir)) * dir;
        CHECK(t.to_barycentric(foot) == contacts[s]);
        CHECK(t.dist2(contacts[s], incenter) == Scalar(16));
    }
    CHECK(conic_center(incircle) == incenter);
    CHECK(classify(incircle) == ConicClass::Ellipse);
}

TEST_CASE("pole and polar on the steiner inellipse") {
    Conic c = steiner_inellipse();
    // Brute-force expectations from the matrix [[1,-1,-1],[-1,1,-1],[-1,-1,1]],
    // adjugate [[0,2,2],[2,0,2],[2,2,0]]: the pole of a tangent side line is
    // its contact midpoint, and the pole of a contact chord is a vertex.
    CHECK(pole(c, side_line(Side::BC)) == HPoint(0, 1, 1));
    HLine chord = join(HPoint(1, 0, 1), HPoint(1, 1, 0));
    CHECK(pole(c, chord) == HPoint(1, 0, 0));
    CHECK(polar(c, conic_center(c)) == line_at_infinity());

    Rng rng(67);
    for (int i = 0; i < 200; ++i) {
        HPoint p = sample_perspector(rng);
        CHECK(pole(c, polar(c, p)) == p);  // involution
    }
    Conic degenerate({Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
    CHECK_THROWS_AS(polar(degenerate, HPoint(1, 1, 1)), DegenerateConic);
    CHECK_THROWS_AS(conic_center(degenerate), DegenerateConic);
    CHECK_THROWS_AS(tangent_at(c, HPoint(1, 0, 0)), PointNotOnConic);
}

TEST_CASE("classification") {
    CHECK(classify(steiner_inellipse()) == ConicClass::Ellipse);

    // Perspector on the Steiner circumellipse gives a parabola. Oracle: the
    // line at infinity is tangent, i.e. the adjugate annihilates (1,1,1),
    // and the infinite center direction lies on the conic.
    HPoint pp = steiner_circumellipse_point(Integer(1), Integer(1));
    CHECK(on_conic(steiner_circumellipse(), pp));
    Conic parabola = inconic_from_perspector(pp);
    CHECK(classify(parabola) == ConicClass::Parabola);
    CHECK(is_tangent_line(parabola, line_at_infinity()));
    HPoint dir = pole(parabola, line_at_infinity());
    CHECK(dir.is_infinite());
    CHECK(on_conic(parabola, dir));
    CHECK_THROWS_AS(conic_center(parabola), CenterAtInfinity);

    // Far-outside perspector with a negative coordinate: a hyperbola. Oracle:
    // the restriction to the line at infinity changes sign on a grid sweep.
    HPoint ph(-5, 1, 1);
    Conic hyper = inconic_from_perspector(ph);
    CHECK(classify(hyper) == ConicClass::Hyperbola);
    bool pos = false, neg = false;
    for (long s = -12; s <= 12; ++s) {
        for (long tt = -12; tt <= 12; ++tt) {
            if (s == 0 && tt == 0) continue;
            HPoint at_inf(s, tt, -s - tt);
            int sign = sgn(hyper.value_at(at_inf));
            pos = pos || sign > 0;
            neg = neg || sign < 0;
        }
    }
    CHECK(pos);
    CHECK(neg);

    // Inconic(P) is a parabola exactly when P lies on the Steiner
    // circumellipse.
    Rng rng(71);
    Conic sc = steiner_circumellipse();
    for (int i = 0; i < 200; ++i) {
        HPoint p = sample_perspector(rng);
        CHECK((classify(inconic_from_perspector(p)) == ConicClass::Parabola) == on_conic(sc, p));
        long u = rng.uniform(-10, 10), v = rng.uniform(-10, 10);
        if (u == 0 || v == 0 || u + v == 0) continue;
        HPoint on_curve = steiner_circumellipse_point(Integer(u), Integer(v));
        CHECK(on_conic(sc, on_curve));
        CHECK(classify(inconic_from_perspector(on_curve)) == ConicClass::Parabola);
    }
}

TEST_CASE("conic through five points") {
    // Reconstruction: five rational points of the Steiner circumellipse give
    // back its matrix up to scale.
    std::array<HPoint, 5> pts = {steiner_circumellipse_point(Integer(1), Integer(1)),
                                 steiner_circumellipse_point(Integer(1), Integer(2)),
                                 steiner_circumellipse_point(Integer(2), Integer(1)),
                                 steiner_circumellipse_point(Integer(1), Integer(3)),
                                 steiner_circumellipse_point(Integer(3), Integer(1))};
    CHECK(conic_through_5(pts) == steiner_circumellipse());

    // Three collinear points force a degenerate (line-pair) conic.
    std::array<HPoint, 5> with_line = {HPoint(1, 0, 0), HPoint(0, 1, 0), HPoint(1, 1, 0),
                                       HPoint(0, 0, 1), HPoint(1, 1, 1)};
    Conic pair = conic_through_5(with_line);
    CHECK(pair.degenerate());
    CHECK(classify(pair) == ConicClass::Degenerate);
    for (const HPoint& p : with_line) CHECK(on_conic(pair, p));

    // Four collinear points leave the system rank-deficient.
    std::array<HPoint, 5> four_online = {HPoint(1, 0, 0), HPoint(0, 1, 0), HPoint(1, 1, 0),
                                         HPoint(1, 2, 0), HPoint(0, 0, 1)};
    CHECK_THROWS_AS(conic_through_5(four_online), RankDeficient);
}

TEST_CASE("center duality: reflection through the center stays on the conic") {
    Rng rng(73);
    for (int i = 0; i < 100; ++i) {
        HPoint p = sample_perspector(rng, /*finite_contacts=*/true);
        Conic c = inconic_from_perspector(p);
        if (classify(c) == ConicClass::Parabola) continue;
        HPoint center = conic_center(c);
        HPoint contact = inconic_contacts(c)[0];
        auto [b, cpt] = sample_inconic_chord(c, contact, rng);
        for (const HPoint& q : {b, cpt}) {
            if (q.is_infinite()) continue;
            CHECK(on_conic(c, reflect(q, center)));
        }
    }
}

TEST_CASE("tangency by duality and Brianchon-Ceva") {
    TriangleRef t = tri_4_1_3();
    Rng rng(79);
    for (int i = 0; i < 200; ++i) {
        HPoint p = sample_perspector(rng);
        Conic c = inconic_from_perspector(p);
        auto feet = cevian_feet(p);
        for (int s = 0; s < 3; ++s) CHECK(polar(c, feet[s]) == side_line(static_cast<Side>(s)));
        CHECK(verify_perspector_concurrency(t, p));
    }
}

TEST_CASE("figure-2 center construction agrees with the matrix center") {
    Rng rng(83);
    for (int i = 0; i < 200; ++i) {
        HPoint p = sample_perspector(rng, /*finite_contacts=*/true);
        CHECK(verify_center_construction_agreement(p));
    }
    // Concrete instance: the Steiner case concurs at G.
    CHECK(inconic_center_by_chords(HPoint(1, 1, 1)) == HPoint(1, 1, 1));
}

TEST_CASE("lemoine hexagon") {
    Rng rng(89);
    for (int i = 0; i < 50; ++i) {
        Rng trial(trial_seed(89, 1, i));
        TriangleRef t = sample_triangle(trial, 40, ShapeFilter::Acute);
        Hexagon hex = lemoine_hexagon(t);
        HPoint k = symmedian_point(t);

        // Six exact equal squared distances: the second Lemoine circle.
        Scalar r2 = t.dist2(hex.vertex(0), k);
        for (int v = 1; v < 6; ++v) CHECK(t.dist2(hex.vertex(v), k) == r2);

        // The diagonals are the antiparallels through K. In boundary order
        // the first vertex on AB comes from the antiparallel at CA.
        for (int d = 0; d < 3; ++d) CHECK(incident(k, hex.diagonal(d)));
        CHECK(hex.diagonal(0) == antiparallel_through(t, k, Side::CA));
        CHECK(hex.diagonal(1) == antiparallel_through(t, k, Side::BC));
        CHECK(hex.diagonal(2) == antiparallel_through(t, k, Side::AB));

        // Opposite sides are parallel.
        for (int s = 0; s < 3; ++s) CHECK(meet(hex.side(s), hex.side(s + 3)).is_infinite());
    }
}

TEST_CASE("reflected-triangle hexagon") {
    // P = G: everything is centrally symmetric about the centroid and the
    // circumconic is concentric with the Steiner inellipse.
    TriangleRef t = tri_4_1_3();
    auto [hex_g, circ_g] = reflected_triangle_hexagon(t, HPoint(1, 1, 1));
    CHECK(conic_center(circ_g) == HPoint(1, 1, 1));
    for (int i = 0; i < 3; ++i) CHECK(reflect(hex_g.vertex(i), centroid()) == hex_g.vertex(i + 3));
    CHECK(classify(circ_g) == ConicClass::Ellipse);

    Rng rng(97);
    int done = 0;
    for (int i = 0; done < 40; ++i) {
        Rng trial(trial_seed(97, 1, i));
        TriangleRef tt = sample_triangle(trial, 40, ShapeFilter::Acute);
        // Interior perspector: positive coordinates give an inscribed ellipse.
        HPoint p(trial.uniform(1, 9), trial.uniform(1, 9), trial.uniform(1, 9));
        Conic gamma = inconic_from_perspector(p);
        REQUIRE(classify(gamma) == ConicClass::Ellipse);
        auto [hex, circ] = reflected_triangle_hexagon(tt, p);
        HPoint omega = conic_center(gamma);
        CHECK(conic_center(circ) == omega);
        for (int v = 0; v < 6; ++v) CHECK(on_conic(circ, hex.vertex(v)));

        // The reflected triangle's sides touch gamma at the reflections of
        // the contact points.
        auto contacts = inconic_contacts(gamma);
        std::array<HPoint, 3> refl = {reflect(vertex_point(0), omega),
                                      reflect(vertex_point(1), omega),
                                      reflect(vertex_point(2), omega)};
        std::array<HLine, 3> rsides = {join(refl[1], refl[2]), join(refl[2], refl[0]),
                                       join(refl[0], refl[1])};
        for (int s = 0; s < 3; ++s) {
            CHECK(is_tangent_line(gamma, rsides[s]));
            CHECK(pole(gamma, rsides[s]) == reflect(contacts[s], omega));
        }
        ++done;
    }

    // A hyperbolic inconic is rejected.
    CHECK_THROWS_AS(reflected_triangle_hexagon(t, HPoint(-5, 1, 1)), NotAnEllipse);
}

TEST_CASE("chord second point stays rational and on the conic") {
    Conic c = steiner_inellipse();
    HPoint contact = side_midpoint(Side::BC);
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        auto [b, cpt] = sample_inconic_chord(c, contact, rng);
        CHECK(on_conic(c, b));
        CHECK(on_conic(c, cpt));
        CHECK(b != cpt);
    }
}
