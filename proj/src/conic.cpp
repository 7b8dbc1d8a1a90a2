#include "inconic/conic.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace inconic {

const char* to_string(ConicClass c) {
    switch (c) {
        case ConicClass::Ellipse: return "Ellipse";
        case ConicClass::Parabola: return "Parabola";
        case ConicClass::Hyperbola: return "Hyperbola";
        default: return "Degenerate";
    }
}

namespace {

// Symmetric index map: (i,j) -> position in (m00, m01, m02, m11, m12, m22).
constexpr int sym_index[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

template <std::size_t N>
std::array<Integer, N> canonicalize_entries(const std::array<Scalar, N>& in) {
    Integer den(1);
    for (const auto& q : in) den = lcm(den, q.get_den());
    std::array<Integer, N> v;
    for (std::size_t i = 0; i < N; ++i) v[i] = in[i].get_num() * (den / in[i].get_den());
    Integer g(0);
    for (const auto& e : v) g = gcd(g, e);
    if (sgn(g) == 0) throw std::invalid_argument("zero conic matrix");
    for (auto& e : v) e /= g;
    for (const auto& e : v) {
        if (sgn(e) != 0) {
            if (sgn(e) < 0)
                for (auto& f : v) f = -f;
            break;
        }
    }
    return v;
}

/// Kernel basis of a small dense rational matrix (Gauss-Jordan, exact).
std::vector<std::array<Scalar, 6>> null_space(std::vector<std::array<Scalar, 6>> rows) {
    constexpr int cols = 6;
    std::vector<int> pivot_col_of_row;
    std::array<int, cols> pivot_row_of_col;
    pivot_row_of_col.fill(-1);
    std::size_t r = 0;
    for (int col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = rows[r][col];
        for (int j = 0; j < cols; ++j) rows[r][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            Scalar f = rows[i][col];
            for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_row_of_col[col] = static_cast<int>(r);
        pivot_col_of_row.push_back(col);
        ++r;
    }
    std::vector<std::array<Scalar, 6>> basis;
    for (int col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col] != -1) continue;
        std::array<Scalar, 6> v;
        v.fill(Scalar(0));
        v[col] = 1;
        for (int pc = 0; pc < cols; ++pc) {
            int pr = pivot_row_of_col[pc];
            if (pr != -1) v[pc] = -rows[pr][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::array<Integer, 3> triple_of(const HPoint& p) { return {p[0], p[1], p[2]}; }
std::array<Integer, 3> triple_of(const HLine& l) { return {l[0], l[1], l[2]}; }

/// Row of the linear system expressing f^T M f = 0.
std::array<Scalar, 6> on_conic_row(const HPoint& f) {
    return {Scalar(f[0] * f[0]), Scalar(2 * f[0] * f[1]), Scalar(2 * f[0] * f[2]),
            Scalar(f[1] * f[1]), Scalar(2 * f[1] * f[2]), Scalar(f[2] * f[2])};
}

/// Row expressing (M f)[k] = 0.
std::array<Scalar, 6> polar_component_row(const HPoint& f, int k) {
    std::array<Scalar, 6> row;
    row.fill(Scalar(0));
    for (int j = 0; j < 3; ++j) row[sym_index[k][j]] += Scalar(f[j]);
    return row;
}

}  // namespace

const Integer& SymMat3::at(int i, int j) const { return e[sym_index[i][j]]; }

Integer SymMat3::eval(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) const {
    Integer s(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += at(i, j) * a[i] * b[j];
    return s;
}

std::array<Integer, 3> SymMat3::mul(const std::array<Integer, 3>& v) const {
    std::array<Integer, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = at(i, 0) * v[0] + at(i, 1) * v[1] + at(i, 2) * v[2];
    return r;
}

Conic::Conic(const std::array<Scalar, 6>& entries) : m_(canonicalize_entries(entries)) {}

const Integer& Conic::at(int i, int j) const { return m_[sym_index[i][j]]; }

Integer Conic::det() const {
    const Integer& m00 = m_[0];
    const Integer& m01 = m_[1];
    const Integer& m02 = m_[2];
    const Integer& m11 = m_[3];
    const Integer& m12 = m_[4];
    const Integer& m22 = m_[5];
    return m00 * (m11 * m22 - m12 * m12) - m01 * (m01 * m22 - m12 * m02) +
           m02 * (m01 * m12 - m11 * m02);
}

SymMat3 Conic::adjugate() const {
    const Integer& m00 = m_[0];
    const Integer& m01 = m_[1];
    const Integer& m02 = m_[2];
    const Integer& m11 = m_[3];
    const Integer& m12 = m_[4];
    const Integer& m22 = m_[5];
    SymMat3 a;
    a.e[0] = m11 * m22 - m12 * m12;
    a.e[1] = m02 * m12 - m01 * m22;
    a.e[2] = m01 * m12 - m02 * m11;
    a.e[3] = m00 * m22 - m02 * m02;
    a.e[4] = m01 * m02 - m00 * m12;
    a.e[5] = m00 * m11 - m01 * m01;
    return a;
}

Integer Conic::value_at(const HPoint& p) const {
    const Integer& x = p[0];
    const Integer& y = p[1];
    const Integer& z = p[2];
    return m_[0] * x * x + m_[3] * y * y + m_[5] * z * z +
           2 * (m_[1] * x * y + m_[2] * x * z + m_[4] * y * z);
}

std::string Conic::str() const {
    auto row = [this](int i) {
        return "[" + to_string(at(i, 0)) + ", " + to_string(at(i, 1)) + ", " + to_string(at(i, 2)) +
               "]";
    };
    return "[" + row(0) + ", " + row(1) + ", " + row(2) + "]";
}

std::ostream& operator<<(std::ostream& os, const Conic& c) { return os << c.str(); }

Hexagon::Hexagon(std::array<HPoint, 6> v) : v_(std::move(v)) {
    for (int i = 0; i < 6; ++i)
        if (v_[i] == v_[(i + 1) % 6])
            throw GeometryError("hexagon has coincident consecutive vertices");
}

Conic inconic_from_perspector(const HPoint& p) {
    if (sgn(p.x()) == 0 || sgn(p.y()) == 0 || sgn(p.z()) == 0) throw DegeneratePerspector();
    auto feet = cevian_feet(p);

    // The foot on each side must lie on the conic and have that side as its
    // polar: for side x = 0 the polar components y and z vanish, etc.
    std::vector<std::array<Scalar, 6>> rows;
    constexpr int vanishing[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (int s = 0; s < 3; ++s) {
        rows.push_back(on_conic_row(feet[s]));
        rows.push_back(polar_component_row(feet[s], vanishing[s][0]));
        rows.push_back(polar_component_row(feet[s], vanishing[s][1]));
    }
    auto kernel = null_space(std::move(rows));
    if (kernel.size() != 1)
        throw GeometryError("tangency system does not determine a unique conic");
    Conic conic(kernel.front());

    // The construction is self-verifying: re-check every defining tangency.
    SymMat3 adj = conic.adjugate();
    for (int s = 0; s < 3; ++s) {
        HLine side = side_line(static_cast<Side>(s));
        if (sgn(adj.eval(triple_of(side), triple_of(side))) != 0 ||
            !on_conic(conic, feet[s]) || polar(conic, feet[s]) != side)
            throw GeometryError("inscribed conic failed tangency verification");
    }
    return conic;
}

Conic conic_through_5(std::span<const HPoint, 5> pts) {
    std::vector<std::array<Scalar, 6>> rows;
    for (const HPoint& p : pts) rows.push_back(on_conic_row(p));
    auto kernel = null_space(std::move(rows));
    if (kernel.size() != 1) throw RankDeficient();
    return Conic(kernel.front());
}

Conic conic_through_5(const std::array<HPoint, 5>& pts) {
    return conic_through_5(std::span<const HPoint, 5>(pts));
}

Conic steiner_circumellipse() {
    return Conic({Scalar(0), Scalar(1), Scalar(1), Scalar(0), Scalar(1), Scalar(0)});
}

HPoint steiner_circumellipse_point(const Integer& u, const Integer& v) {
    Integer w = -(u + v);
    if (sgn(u) == 0 || sgn(v) == 0 || sgn(w) == 0)
        throw std::invalid_argument("parameters must give three nonzero coordinates");
    return HPoint(Scalar(v * w), Scalar(u * w), Scalar(u * v));
}

HPoint conic_center(const Conic& c) {
    if (c.degenerate()) throw DegenerateConic();
    auto cen = c.adjugate().mul({Integer(1), Integer(1), Integer(1)});
    if (sgn(Integer(cen[0] + cen[1] + cen[2])) == 0) throw CenterAtInfinity();
    return HPoint(Scalar(cen[0]), Scalar(cen[1]), Scalar(cen[2]));
}

HLine polar(const Conic& c, const HPoint& p) {
    if (c.degenerate()) throw DegenerateConic();
    const auto r = [&](int i) -> Integer {
        return c.at(i, 0) * p[0] + c.at(i, 1) * p[1] + c.at(i, 2) * p[2];
    };
    return HLine(Scalar(r(0)), Scalar(r(1)), Scalar(r(2)));
}

HPoint pole(const Conic& c, const HLine& l) {
    if (c.degenerate()) throw DegenerateConic();
    auto v = c.adjugate().mul(triple_of(l));
    return HPoint(Scalar(v[0]), Scalar(v[1]), Scalar(v[2]));
}

bool on_conic(const Conic& c, const HPoint& p) { return sgn(c.value_at(p)) == 0; }

HLine tangent_at(const Conic& c, const HPoint& p) {
    if (!on_conic(c, p)) throw PointNotOnConic();
    return polar(c, p);
}

bool is_tangent_line(const Conic& c, const HLine& l) {
    if (c.degenerate()) throw DegenerateConic();
    return sgn(c.adjugate().eval(triple_of(l), triple_of(l))) == 0;
}

ConicClass classify(const Conic& c) {
    if (c.degenerate()) return ConicClass::Degenerate;
    // Restriction of the form to the line at infinity, in the basis
    // (1,0,-1), (0,1,-1): a binary quadratic with discriminant delta.
    Integer alpha = c.at(0, 0) - 2 * c.at(0, 2) + c.at(2, 2);
    Integer beta = c.at(0, 1) - c.at(0, 2) - c.at(1, 2) + c.at(2, 2);
    Integer gamma = c.at(1, 1) - 2 * c.at(1, 2) + c.at(2, 2);
    int d = sgn(Integer(beta * beta - alpha * gamma));
    if (d < 0) return ConicClass::Ellipse;
    if (d == 0) return ConicClass::Parabola;
    return ConicClass::Hyperbola;
}

HPoint chord_second_point(const Conic& c, const HPoint& on, const HPoint& other) {
    if (!on_conic(c, on)) throw PointNotOnConic();
    Integer qq = c.value_at(other);
    if (sgn(qq) == 0) throw std::invalid_argument("chord direction point lies on the conic");
    SymMat3 m{{c.entries()[0], c.entries()[1], c.entries()[2], c.entries()[3], c.entries()[4],
               c.entries()[5]}};
    Integer pq = m.eval(triple_of(on), triple_of(other));
    std::array<Integer, 3> x;
    for (int i = 0; i < 3; ++i) x[i] = qq * on[i] - 2 * pq * other[i];
    HPoint second{Scalar(x[0]), Scalar(x[1]), Scalar(x[2])};
    if (!on_conic(c, second)) throw GeometryError("chord parametrization left the conic");
    return second;
}

std::array<HPoint, 3> inconic_contacts(const Conic& inconic) {
    return {pole(inconic, side_line(Side::BC)), pole(inconic, side_line(Side::CA)),
            pole(inconic, side_line(Side::AB))};
}

HPoint inconic_center_by_chords(const HPoint& p) {
    auto feet = cevian_feet(p);
    // Vertex X joins the midpoint of the chord between the contacts on the
    // two sides through X.
    HLine la = join(opposite_vertex(Side::BC), midpoint(feet[1], feet[2]));
    HLine lb = join(opposite_vertex(Side::CA), midpoint(feet[2], feet[0]));
    HLine lc = join(opposite_vertex(Side::AB), midpoint(feet[0], feet[1]));
    if (!concurrent(la, lb, lc))
        throw GeometryError("contact-chord midlines failed to concur");
    return meet(la, lb);
}

namespace {

/// Affine parameter of a point along a directed side, used only for ordering.
Scalar param_along(Side s, const HPoint& p) {
    Integer num, den;
    switch (s) {
        case Side::AB: num = p[1]; den = p[0] + p[1]; break;  // A -> B
        case Side::BC: num = p[2]; den = p[1] + p[2]; break;  // B -> C
        default: num = p[0]; den = p[2] + p[0]; break;        // C -> A
    }
    if (sgn(den) == 0) throw PointAtInfinity();
    Scalar t(num, den);
    t.canonicalize();
    return t;
}

/// Boundary-ordered hexagon from two intersection points per side.
Hexagon hexagon_from_side_pairs(std::array<std::pair<HPoint, HPoint>, 3> on_side) {
    const Side boundary[3] = {Side::AB, Side::BC, Side::CA};
    std::array<HPoint, 6> v = {on_side[0].first,  on_side[0].second, on_side[1].first,
                               on_side[1].second, on_side[2].first,  on_side[2].second};
    for (int i = 0; i < 3; ++i) {
        if (param_along(boundary[i], v[2 * i]) > param_along(boundary[i], v[2 * i + 1]))
            std::swap(v[2 * i], v[2 * i + 1]);
    }
    return Hexagon(std::move(v));
}

}  // namespace

Hexagon lemoine_hexagon(const TriangleRef& t) {
    HPoint k = symmedian_point(t);
    HLine anti_bc = antiparallel_through(t, k, Side::BC);
    HLine anti_ca = antiparallel_through(t, k, Side::CA);
    HLine anti_ab = antiparallel_through(t, k, Side::AB);
    HLine ab = side_line(Side::AB), bc = side_line(Side::BC), ca = side_line(Side::CA);
    // The antiparallel at a side crosses the two sides through the opposite
    // vertex.
    return hexagon_from_side_pairs({{{meet(anti_bc, ab), meet(anti_ca, ab)},
                                     {meet(anti_ca, bc), meet(anti_ab, bc)},
                                     {meet(anti_ab, ca), meet(anti_bc, ca)}}});
}

std::pair<Hexagon, Conic> reflected_triangle_hexagon(const TriangleRef&, const HPoint& p) {
    // The construction is purely projective in barycentrics; the triangle
    // argument fixes the chart the caller works in.
    Conic gamma = inconic_from_perspector(p);
    if (classify(gamma) != ConicClass::Ellipse) throw NotAnEllipse();
    HPoint omega = conic_center(gamma);

    std::array<HPoint, 3> refl = {reflect(vertex_point(0), omega), reflect(vertex_point(1), omega),
                                  reflect(vertex_point(2), omega)};
    HLine rab = join(refl[0], refl[1]);  // parallel to AB
    HLine rbc = join(refl[1], refl[2]);
    HLine rca = join(refl[2], refl[0]);
    HLine ab = side_line(Side::AB), bc = side_line(Side::BC), ca = side_line(Side::CA);

    Hexagon hex = hexagon_from_side_pairs({{{meet(ab, rbc), meet(ab, rca)},
                                            {meet(bc, rca), meet(bc, rab)},
                                            {meet(ca, rab), meet(ca, rbc)}}});

    // Central symmetry about omega pairs opposite vertices.
    for (int i = 0; i < 3; ++i)
        if (reflect(hex.vertex(i), omega) != hex.vertex(i + 3))
            throw GeometryError("reflected hexagon lost central symmetry");

    Conic circum = conic_through_5({hex.vertex(0), hex.vertex(1), hex.vertex(2), hex.vertex(3),
                                    hex.vertex(4)});
    if (!on_conic(circum, hex.vertex(5)))
        throw GeometryError("hexagon circumconic failed sixth-point closure");
    if (conic_center(circum) != omega)
        throw GeometryError("hexagon circumconic is not concentric with the inconic");
    return {std::move(hex), std::move(circum)};
}

}  // namespace inconic
