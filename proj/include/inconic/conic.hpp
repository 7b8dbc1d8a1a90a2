#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>

#include "inconic/centers.hpp"
#include "inconic/kernel.hpp"

namespace inconic {

enum class ConicClass { Ellipse, Parabola, Hyperbola, Degenerate };

const char* to_string(ConicClass c);

/// Symmetric 3x3 integer matrix, not scaled to canonical form. Used for
/// adjugates, which may be rank-deficient and therefore are not Conic values.
struct SymMat3 {
    // Entry order: m00, m01, m02, m11, m12, m22.
    std::array<Integer, 6> e;

    const Integer& at(int i, int j) const;
    /// e^T * M * f for integer triples.
    Integer eval(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) const;
    std::array<Integer, 3> mul(const std::array<Integer, 3>& v) const;
};

/// A conic { X : X^T M X = 0 } given by a symmetric matrix in barycentric
/// coordinates, canonicalized up to scale (integer entries, gcd 1, first
/// nonzero entry positive). Degenerate matrices are representable; only the
/// zero matrix is rejected.
class Conic {
public:
    /// Entries m00, m01, m02, m11, m12, m22 of the symmetric matrix.
    explicit Conic(const std::array<Scalar, 6>& entries);

    const Integer& at(int i, int j) const;
    const std::array<Integer, 6>& entries() const { return m_; }

    Integer det() const;
    SymMat3 adjugate() const;
    bool degenerate() const { return sgn(det()) == 0; }

    /// X^T M X for the canonical integer representative of p.
    Integer value_at(const HPoint& p) const;

    friend bool operator==(const Conic& a, const Conic& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Conic& a, const Conic& b) { return a.m_ != b.m_; }

    std::string str() const;

private:
    std::array<Integer, 6> m_;
};

std::ostream& operator<<(std::ostream& os, const Conic& c);

/// Cyclically ordered hexagon; opposite vertex pairs are (0,3), (1,4), (2,5).
class Hexagon {
public:
    explicit Hexagon(std::array<HPoint, 6> v);  // consecutive vertices must differ

    const HPoint& vertex(int i) const { return v_[((i % 6) + 6) % 6]; }
    /// Line through vertices i and i+1.
    HLine side(int i) const { return join(vertex(i), vertex(i + 1)); }
    /// Line through opposite vertices i and i+3.
    HLine diagonal(int i) const { return join(vertex(i), vertex(i + 3)); }

private:
    std::array<HPoint, 6> v_;
};

// -- construction ------------------------------------------------------------

/// The unique conic tangent to the three side lines at the cevian feet of p,
/// obtained by solving the tangency constraints as an exact linear system.
/// Tangency is re-verified after construction.
Conic inconic_from_perspector(const HPoint& p);  // throws DegeneratePerspector

/// Unique conic through five points. Throws RankDeficient when the
/// configuration does not pin the conic down (four or more collinear).
Conic conic_through_5(std::span<const HPoint, 5> pts);
Conic conic_through_5(const std::array<HPoint, 5>& pts);

/// Circumconic x*y + y*z + z*x = 0 through the vertices, centered at G.
Conic steiner_circumellipse();

/// Rational point on the Steiner circumellipse from the isotomic
/// parametrization of the line at infinity by (u : v : -(u+v)).
HPoint steiner_circumellipse_point(const Integer& u, const Integer& v);

// -- queries -----------------------------------------------------------------

/// Pole of the line at infinity via the adjugate matrix; the center of
/// symmetry for central conics.
HPoint conic_center(const Conic& c);  // throws DegenerateConic, CenterAtInfinity

HLine polar(const Conic& c, const HPoint& p);  // throws DegenerateConic
HPoint pole(const Conic& c, const HLine& l);   // throws DegenerateConic

bool on_conic(const Conic& c, const HPoint& p);
HLine tangent_at(const Conic& c, const HPoint& p);  // throws PointNotOnConic

/// True iff l is tangent to the (nondegenerate) conic: l^T adj(M) l = 0.
bool is_tangent_line(const Conic& c, const HLine& l);

ConicClass classify(const Conic& c);

/// Second intersection of the conic with the line through `on` (a point of
/// the conic) and `other` (not on the conic). Exact chord parametrization.
HPoint chord_second_point(const Conic& c, const HPoint& on, const HPoint& other);

/// Contact points of an inscribed conic with the three side lines, recovered
/// from the matrix as the poles of the sides.
std::array<HPoint, 3> inconic_contacts(const Conic& inconic);

/// Center construction by contact chords: the meet of the lines joining each
/// vertex to the midpoint of the opposite contact chord. Agrees with
/// conic_center(inconic_from_perspector(p)) and works projectively for
/// parabolas (the meet is then at infinity).
HPoint inconic_center_by_chords(const HPoint& p);  // throws PointAtInfinity if a contact chord degenerates

// -- hexagons ----------------------------------------------------------------

/// Intersections of the three antiparallels through the symmedian point with
/// the triangle sides, in boundary order starting on AB. The diagonals are
/// the antiparallels themselves.
Hexagon lemoine_hexagon(const TriangleRef& t);

/// Reflects the triangle through the center of the inscribed ellipse of p and
/// intersects corresponding non-parallel sides; returns the hexagon (boundary
/// order, centrally symmetric about the center) and its circumconic, which is
/// concentric with the inconic. Both facts are verified exactly.
std::pair<Hexagon, Conic> reflected_triangle_hexagon(const TriangleRef& t, const HPoint& p);
// throws NotAnEllipse

}  // namespace inconic
