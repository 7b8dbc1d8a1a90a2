#include "inconic/figures.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "inconic/affine.hpp"
#include "inconic/conic.hpp"

namespace inconic {

namespace {

using Eigen::Vector2d;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct BBox {
    double x0 = std::numeric_limits<double>::max();
    double y0 = std::numeric_limits<double>::max();
    double x1 = std::numeric_limits<double>::lowest();
    double y1 = std::numeric_limits<double>::lowest();

    void include(const Vector2d& p) {
        x0 = std::min(x0, p.x());
        y0 = std::min(y0, p.y());
        x1 = std::max(x1, p.x());
        y1 = std::max(y1, p.y());
    }
    void inflate(double frac) {
        double dx = (x1 - x0) * frac, dy = (y1 - y0) * frac;
        double pad = std::max({dx, dy, 1e-6});
        x0 -= pad;
        x1 += pad;
        y0 -= pad;
        y1 += pad;
    }
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

struct Prim {
    enum Kind { Segment, InfLine, Polygon, Path, Circle, Marker, Dot, Label } kind;
    std::vector<Vector2d> pts;  // geometry, or {anchor, direction} for InfLine
    double radius = 0.0;        // world radius for Circle
    std::string cls;
    std::string text;
};

/// Collects world-space primitives, then emits them with a y-flipped
/// viewport fitted to everything except the clipped infinite lines.
class FigureBuilder {
public:
    void segment(const Vector2d& a, const Vector2d& b, std::string cls) {
        prims_.push_back({Prim::Segment, {a, b}, 0.0, std::move(cls), {}});
    }
    void inf_line(const Vector2d& anchor, const Vector2d& dir, std::string cls) {
        prims_.push_back({Prim::InfLine, {anchor, dir}, 0.0, std::move(cls), {}});
    }
    void polygon(std::vector<Vector2d> pts, std::string cls) {
        prims_.push_back({Prim::Polygon, std::move(pts), 0.0, std::move(cls), {}});
    }
    void path(std::vector<Vector2d> pts, std::string cls) {
        prims_.push_back({Prim::Path, std::move(pts), 0.0, std::move(cls), {}});
    }
    void circle(const Vector2d& center, double radius, std::string cls) {
        prims_.push_back({Prim::Circle, {center}, radius, std::move(cls), {}});
    }
    void marker(const Vector2d& p, std::string cls = "marker") {
        prims_.push_back({Prim::Marker, {p}, 0.0, std::move(cls), {}});
    }
    void dot(const Vector2d& p, std::string cls) {
        prims_.push_back({Prim::Dot, {p}, 0.0, std::move(cls), {}});
    }
    void label(const Vector2d& p, std::string text) {
        prims_.push_back({Prim::Label, {p}, 0.0, "lbl", std::move(text)});
    }

    void render(std::ostream& os, const std::string& title, double stroke_width) const;

private:
    std::vector<Prim> prims_;
};

void FigureBuilder::render(std::ostream& os, const std::string& title,
                           double stroke_width) const {
    BBox box;
    for (const auto& p : prims_) {
        switch (p.kind) {
            case Prim::InfLine:
                break;  // clipped to the final viewport, no bbox vote
            case Prim::Circle:
                box.include(p.pts[0] + Vector2d(p.radius, p.radius));
                box.include(p.pts[0] - Vector2d(p.radius, p.radius));
                break;
            case Prim::Dot:
                break;  // scan samples may roam; they get clipped instead
            default:
                for (const auto& q : p.pts) box.include(q);
        }
    }
    box.inflate(0.20);

    const double width_px = 880.0;
    const double scale = width_px / box.width();
    const double height_px = box.height() * scale;
    auto map = [&](const Vector2d& w) {
        return Vector2d((w.x() - box.x0) * scale, (box.y1 - w.y()) * scale);
    };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width_px)
       << "\" height=\"" << fmt(height_px) << "\" viewBox=\"0 0 " << fmt(width_px) << " "
       << fmt(height_px) << "\">\n";
    os << "<title>" << title << "</title>\n";
    const std::string w = fmt(stroke_width), w8 = fmt(stroke_width * 0.8),
                      w7 = fmt(stroke_width * 0.7);
    os << "<style>\n"
       << ".tri{fill:none;stroke:#1f3b63;stroke-width:" << w << "}\n"
       << ".tri-light{fill:none;stroke:#7fb2e5;stroke-width:" << w8 << "}\n"
       << ".conic{fill:none;stroke:#7a2fbb;stroke-width:" << w << "}\n"
       << ".conic2{fill:none;stroke:#2c7fb8;stroke-width:" << w << "}\n"
       << ".hex{fill:none;stroke:#2c7fb8;stroke-width:" << w8 << "}\n"
       << ".lemoine-circle{fill:none;stroke:#2c7fb8;stroke-width:" << w8 << "}\n"
       << ".cev{stroke:#c23b22;stroke-width:" << w8 << "}\n"
       << ".cev2{stroke:#e08b33;stroke-width:" << w8 << ";stroke-dasharray:6 4}\n"
       << ".aux{stroke:#6b6b6b;stroke-width:" << w7 << ";stroke-dasharray:4 4}\n"
       << ".midline{stroke:#2f7d4f;stroke-width:" << w8 << "}\n"
       << ".marker{fill:#111111}\n"
       << ".marker-acc{fill:#c23b22}\n"
       << ".conic-dot{fill:#7a2fbb}\n"
       << ".lbl{font-family:sans-serif;font-size:14px;fill:#222222}\n"
       << "</style>\n";

    auto emit_poly = [&](const Prim& p, bool closed) {
        os << "<path class=\"" << p.cls << "\" d=\"";
        for (std::size_t i = 0; i < p.pts.size(); ++i) {
            Vector2d s = map(p.pts[i]);
            os << (i == 0 ? "M" : "L") << fmt(s.x()) << " " << fmt(s.y());
        }
        if (closed) os << "Z";
        os << "\"/>\n";
    };

    for (const auto& p : prims_) {
        switch (p.kind) {
            case Prim::Segment: {
                Vector2d a = map(p.pts[0]), b = map(p.pts[1]);
                os << "<line class=\"" << p.cls << "\" x1=\"" << fmt(a.x()) << "\" y1=\""
                   << fmt(a.y()) << "\" x2=\"" << fmt(b.x()) << "\" y2=\"" << fmt(b.y())
                   << "\"/>\n";
                break;
            }
            case Prim::InfLine: {
                // Liang-Barsky clip of anchor + t*dir against the world box.
                const Vector2d& a = p.pts[0];
                const Vector2d& d = p.pts[1];
                double t0 = std::numeric_limits<double>::lowest();
                double t1 = std::numeric_limits<double>::max();
                bool ok = true;
                auto clip = [&](double dv, double qv) {
                    if (std::abs(dv) < 1e-15) {
                        if (qv < 0) ok = false;
                        return;
                    }
                    double t = qv / dv;
                    if (dv < 0)
                        t0 = std::max(t0, t);
                    else
                        t1 = std::min(t1, t);
                };
                clip(-d.x(), a.x() - box.x0);
                clip(d.x(), box.x1 - a.x());
                clip(-d.y(), a.y() - box.y0);
                clip(d.y(), box.y1 - a.y());
                if (!ok || t0 > t1) break;
                Vector2d s = map(a + t0 * d), e = map(a + t1 * d);
                os << "<line class=\"" << p.cls << "\" x1=\"" << fmt(s.x()) << "\" y1=\""
                   << fmt(s.y()) << "\" x2=\"" << fmt(e.x()) << "\" y2=\"" << fmt(e.y())
                   << "\"/>\n";
                break;
            }
            case Prim::Polygon:
                emit_poly(p, true);
                break;
            case Prim::Path:
                emit_poly(p, false);
                break;
            case Prim::Circle: {
                Vector2d c = map(p.pts[0]);
                os << "<circle class=\"" << p.cls << "\" cx=\"" << fmt(c.x()) << "\" cy=\""
                   << fmt(c.y()) << "\" r=\"" << fmt(p.radius * scale) << "\"/>\n";
                break;
            }
            case Prim::Marker: {
                Vector2d c = map(p.pts[0]);
                os << "<circle class=\"" << p.cls << "\" cx=\"" << fmt(c.x()) << "\" cy=\""
                   << fmt(c.y()) << "\" r=\"3.50\"/>\n";
                break;
            }
            case Prim::Dot: {
                Vector2d c = map(p.pts[0]);
                if (c.x() < 0 || c.y() < 0 || c.x() > width_px || c.y() > height_px) break;
                os << "<circle class=\"" << p.cls << "\" cx=\"" << fmt(c.x()) << "\" cy=\""
                   << fmt(c.y()) << "\" r=\"1.20\"/>\n";
                break;
            }
            case Prim::Label: {
                Vector2d c = map(p.pts[0]);
                os << "<text class=\"lbl\" x=\"" << fmt(c.x() + 6.0) << "\" y=\""
                   << fmt(c.y() - 6.0) << "\">" << p.text << "</text>\n";
                break;
            }
        }
    }
    os << "</svg>\n";
}

// -- bridges from the exact layer --------------------------------------------

Vector2d pt(const TriangleRef& t, const HPoint& p) { return to_numeric(t.to_cartesian(p)); }

/// A finite point on the line, from its meets with the side lines.
HPoint finite_anchor(const TriangleRef&, const HLine& l) {
    for (Side s : all_sides) {
        HLine side = side_line(s);
        if (side == l) continue;
        HPoint m = meet(l, side);
        if (!m.is_infinite()) return m;
    }
    throw PointAtInfinity();  // l is the line at infinity
}

void draw_line(FigureBuilder& fig, const TriangleRef& t, const HLine& l, const std::string& cls) {
    HPoint anchor = finite_anchor(t, l);
    Vector2d dir = to_numeric(direction_of(t, infinite_point(l)));
    fig.inf_line(pt(t, anchor), dir.normalized(), cls);
}

std::vector<Vector2d> ellipse_path(const CartConic& conic, int samples) {
    Eigen::Matrix3d n = conic.N;
    if (n.topLeftCorner<2, 2>().trace() < 0) n = -n;
    CartConic pos{n};
    Vector2d c = pos.center();
    double fc = pos.value(c);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(pos.quadratic_part());
    Vector2d ev = eig.eigenvalues();
    if (fc >= 0 || ev.minCoeff() <= 0)
        throw NotAnEllipse();
    Vector2d u = std::sqrt(-fc / ev.x()) * eig.eigenvectors().col(0);
    Vector2d v = std::sqrt(-fc / ev.y()) * eig.eigenvectors().col(1);
    std::vector<Vector2d> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double th = 2.0 * M_PI * i / samples;
        pts.push_back(c + std::cos(th) * u + std::sin(th) * v);
    }
    pts.push_back(pts.front());
    return pts;
}

/// Ellipses become smooth closed paths; parabolas and hyperbolas fall back
/// to scan-line sampling inside twice the triangle's bounding box.
void draw_conic(FigureBuilder& fig, const Conic& c, const TriangleRef& t, int samples,
                const std::string& cls) {
    CartConic n = cartesian_form(c, t);
    if (classify(c) == ConicClass::Ellipse) {
        fig.path(ellipse_path(n, samples), cls);
        return;
    }
    BBox box;
    for (const Vec2* v : {&t.A(), &t.B(), &t.C()}) box.include(to_numeric(*v));
    box.inflate(1.0);
    auto emit_roots = [&](double a, double b, double cc, auto&& make_point) {
        if (std::abs(a) < 1e-12) {
            if (std::abs(b) > 1e-12) fig.dot(make_point(-cc / b), "conic-dot");
            return;
        }
        double disc = b * b - 4 * a * cc;
        if (disc < 0) return;
        double sq = std::sqrt(disc);
        fig.dot(make_point((-b + sq) / (2 * a)), "conic-dot");
        fig.dot(make_point((-b - sq) / (2 * a)), "conic-dot");
    };
    const Eigen::Matrix3d& m = n.N;
    for (int i = 0; i <= samples; ++i) {
        double x = box.x0 + box.width() * i / samples;
        emit_roots(m(1, 1), 2 * (m(0, 1) * x + m(1, 2)), m(0, 0) * x * x + 2 * m(0, 2) * x + m(2, 2),
                   [x](double y) { return Vector2d(x, y); });
        double y = box.y0 + box.height() * i / samples;
        emit_roots(m(0, 0), 2 * (m(0, 1) * y + m(0, 2)), m(1, 1) * y * y + 2 * m(1, 2) * y + m(2, 2),
                   [y](double x2) { return Vector2d(x2, y); });
    }
}

void draw_triangle(FigureBuilder& fig, const TriangleRef& t, const std::string& cls = "tri",
                   bool with_labels = true) {
    fig.polygon({to_numeric(t.A()), to_numeric(t.B()), to_numeric(t.C())}, cls);
    if (with_labels) {
        fig.label(to_numeric(t.A()), "A");
        fig.label(to_numeric(t.B()), "B");
        fig.label(to_numeric(t.C()), "C");
    }
}

// -- the seven figures --------------------------------------------------------

void figure_inscribed_conic(FigureBuilder& fig, const SceneSpec& sc) {
    const TriangleRef& t = sc.triangle;
    auto feet = cevian_feet(sc.perspector);
    Conic inc = inconic_from_perspector(sc.perspector);
    draw_triangle(fig, t);
    draw_conic(fig, inc, t, sc.conic_samples, "conic");
    const char* names[3] = {"A'", "B'", "C'"};
    for (int i = 0; i < 3; ++i) {
        fig.segment(pt(t, vertex_point(i)), pt(t, feet[i]), "cev");
        fig.marker(pt(t, feet[i]), "marker-acc");
        fig.label(pt(t, feet[i]), names[i]);
    }
    fig.marker(pt(t, sc.perspector));
    fig.label(pt(t, sc.perspector), "P");
}

void figure_center_construction(FigureBuilder& fig, const SceneSpec& sc) {
    const TriangleRef& t = sc.triangle;
    auto feet = cevian_feet(sc.perspector);
    Conic inc = inconic_from_perspector(sc.perspector);
    HPoint center = inconic_center_by_chords(sc.perspector);
    draw_triangle(fig, t);
    fig.polygon({pt(t, feet[0]), pt(t, feet[1]), pt(t, feet[2])}, "tri-light");
    draw_conic(fig, inc, t, sc.conic_samples, "conic");
    std::array<HPoint, 3> mids = {midpoint(feet[1], feet[2]), midpoint(feet[2], feet[0]),
                                  midpoint(feet[0], feet[1])};
    for (int i = 0; i < 3; ++i) {
        draw_line(fig, t, join(vertex_point(i), mids[i]), "midline");
        fig.marker(pt(t, mids[i]), "marker-acc");
    }
    fig.marker(pt(t, center));
    fig.label(pt(t, center), "O");
}

void figure_isotomic_complement(FigureBuilder& fig, const SceneSpec& sc) {
    const TriangleRef& t = sc.triangle;
    const HPoint& d = sc.perspector;
    auto feet = cevian_feet(d);
    HPoint iso = isotomic_conjugate(d);
    HPoint comp = complement(iso);
    draw_triangle(fig, t);
    for (int i = 0; i < 3; ++i) {
        Side s = static_cast<Side>(i);
        HPoint reflected = reflect(feet[i], side_midpoint(s));
        fig.segment(pt(t, vertex_point(i)), pt(t, feet[i]), "cev");
        draw_line(fig, t, join(vertex_point(i), reflected), "cev2");
        fig.marker(pt(t, feet[i]), "marker-acc");
        fig.marker(pt(t, reflected), "marker-acc");
        fig.marker(pt(t, side_midpoint(s)), "marker");
    }
    fig.segment(pt(t, comp), pt(t, iso), "aux");  // comp, G, iso are collinear
    fig.marker(pt(t, d));
    fig.label(pt(t, d), "D");
    fig.marker(pt(t, iso));
    fig.label(pt(t, iso), "Iso");
    fig.marker(pt(t, comp));
    fig.label(pt(t, comp), "AIso");
    fig.marker(pt(t, centroid()));
    fig.label(pt(t, centroid()), "G");
}

void figure_orthic_symmedians(FigureBuilder& fig, const SceneSpec& sc) {
    const TriangleRef& t = sc.triangle;
    auto feet = altitude_feet(t);
    auto mids = orthic_midpoints(t);
    HPoint k = symmedian_point(t);
    draw_triangle(fig, t);
    fig.polygon({pt(t, feet[0]), pt(t, feet[1]), pt(t, feet[2])}, "tri-light");
    draw_conic(fig, inconic_from_perspector(orthocenter(t)), t, sc.conic_samples, "conic");
    const char* names[3] = {"Am", "Bm", "Cm"};
    for (int i = 0; i < 3; ++i) {
        draw_line(fig, t, join(vertex_point(i), mids[i]), "midline");
        fig.marker(pt(t, mids[i]), "marker-acc");
        fig.label(pt(t, mids[i]), names[i]);
        fig.marker(pt(t, feet[i]), "marker");
    }
    fig.marker(pt(t, k));
    fig.label(pt(t, k), "K");
}

void figure_lemoine_hexagon(FigureBuilder& fig, const SceneSpec& sc) {
    const TriangleRef& t = sc.triangle;
    Hexagon hex = lemoine_hexagon(t);
    HPoint k = symmedian_point(t);
    double radius = std::sqrt(to_double(t.dist2(hex.vertex(0), k)));
    draw_triangle(fig, t);
    std::vector<Vector2d> ring;
    for (int i = 0; i < 6; ++i) ring.push_back(pt(t, hex.vertex(i)));
    fig.polygon(ring, "hex");
    fig.circle(pt(t, k), radius, "lemoine-circle");
    for (int i = 0; i < 3; ++i)
        fig.segment(pt(t, hex.vertex(i)), pt(t, hex.vertex(i + 3)), "cev2");
    const char* names[6] = {"A1", "A2", "B1", "B2", "C1", "C2"};
    for (int i = 0; i < 6; ++i) {
        fig.marker(ring[i], "marker-acc");
        fig.label(ring[i], names[i]);
    }
    fig.marker(pt(t, k));
    fig.label(pt(t, k), "K");
}

void figure_altitude_midlines(FigureBuilder& fig, const SceneSpec& sc) {
    const TriangleRef& t = sc.triangle;
    auto feet = altitude_feet(t);
    HPoint k = symmedian_point(t);
    HPoint h = orthocenter(t);
    HPoint iso_h = isotomic_conjugate(h);
    draw_triangle(fig, t);
    const char* foot_names[3] = {"Ah", "Bh", "Ch"};
    for (int i = 0; i < 3; ++i) {
        Side s = static_cast<Side>(i);
        HPoint side_mid = side_midpoint(s);
        HPoint alt_mid = midpoint(vertex_point(i), feet[i]);
        HPoint reflected = reflect(feet[i], side_mid);
        fig.segment(pt(t, vertex_point(i)), pt(t, feet[i]), "aux");
        draw_line(fig, t, join(side_mid, alt_mid), "midline");
        draw_line(fig, t, join(vertex_point(i), reflected), "cev2");
        fig.marker(pt(t, feet[i]), "marker");
        fig.label(pt(t, feet[i]), foot_names[i]);
        fig.marker(pt(t, side_mid), "marker");
        fig.marker(pt(t, alt_mid), "marker-acc");
        fig.marker(pt(t, reflected), "marker-acc");
    }
    fig.marker(pt(t, k));
    fig.label(pt(t, k), "K");
    fig.marker(pt(t, centroid()));
    fig.label(pt(t, centroid()), "G");
    fig.marker(pt(t, iso_h));
    fig.label(pt(t, iso_h), "Hm");
}

void figure_reflected_hexagon(FigureBuilder& fig, const SceneSpec& sc) {
    const TriangleRef& t = sc.triangle;
    auto [hex, circum] = reflected_triangle_hexagon(t, sc.perspector);
    Conic gamma = inconic_from_perspector(sc.perspector);
    HPoint omega = conic_center(gamma);

    draw_triangle(fig, t);
    std::array<HPoint, 3> refl = {reflect(vertex_point(0), omega), reflect(vertex_point(1), omega),
                                  reflect(vertex_point(2), omega)};
    fig.polygon({pt(t, refl[0]), pt(t, refl[1]), pt(t, refl[2])}, "tri-light");
    draw_conic(fig, gamma, t, sc.conic_samples, "conic");
    draw_conic(fig, circum, t, sc.conic_samples, "conic2");
    std::vector<Vector2d> ring;
    for (int i = 0; i < 6; ++i) ring.push_back(pt(t, hex.vertex(i)));
    fig.polygon(ring, "hex");
    for (int i = 0; i < 3; ++i)
        fig.segment(pt(t, hex.vertex(i)), pt(t, hex.vertex(i + 3)), "aux");
    fig.marker(pt(t, omega));
    fig.label(pt(t, omega), "Omega");

    // Right panel: the affine image that turns the circumellipse into a
    // circle; the center lands on the image triangle's symmedian point.
    AffineMap to_circle = ellipse_to_circle(circum, t);
    BBox left;
    for (const Vec2* v : {&t.A(), &t.B(), &t.C()}) left.include(to_numeric(*v));
    NumericTriangle img = apply(to_circle, t);
    BBox right;
    for (const Vector2d* v : {&img.A, &img.B, &img.C}) right.include(*v);
    Vector2d offset(left.x1 + 0.35 * left.width() - right.x0,
                    left.y0 + 0.5 * left.height() - (right.y0 + 0.5 * right.height()));
    AffineMap shifted = compose(AffineMap{Eigen::Matrix2d::Identity(), offset}, to_circle);

    NumericTriangle panel = apply(shifted, t);
    fig.polygon({panel.A, panel.B, panel.C}, "tri");
    std::vector<Vector2d> img_ring;
    for (int i = 0; i < 6; ++i) img_ring.push_back(apply(shifted, pt(t, hex.vertex(i))));
    fig.polygon(img_ring, "hex");
    fig.path(ellipse_path(apply(shifted, cartesian_form(circum, t)), sc.conic_samples), "conic2");
    fig.path(ellipse_path(apply(shifted, cartesian_form(gamma, t)), sc.conic_samples), "conic");
    Vector2d omega_img = apply(shifted, pt(t, omega));
    fig.marker(omega_img);
    fig.label(omega_img, "K~");
}

}  // namespace

void render_figure(const SceneSpec& scene, std::ostream& os) {
    FigureBuilder fig;
    std::string title;
    switch (scene.figure_id) {
        case 1:
            title = "inscribed conic and its perspector";
            figure_inscribed_conic(fig, scene);
            break;
        case 2:
            title = "conic center from contact-chord midpoints";
            figure_center_construction(fig, scene);
            break;
        case 3:
            title = "isotomic conjugate and complement";
            figure_isotomic_complement(fig, scene);
            break;
        case 4:
            title = "orthic triangle and symmedians";
            figure_orthic_symmedians(fig, scene);
            break;
        case 5:
            title = "Lemoine circle and hexagon";
            figure_lemoine_hexagon(fig, scene);
            break;
        case 6:
            title = "altitude midpoints and the isotomic conjugate of H";
            figure_altitude_midlines(fig, scene);
            break;
        case 7:
            title = "reflected-triangle hexagon and its circumellipse";
            figure_reflected_hexagon(fig, scene);
            break;
        default:
            throw std::invalid_argument("figure id must be between 1 and 7");
    }
    fig.render(os, title, scene.stroke_width);
}

}  // namespace inconic
