#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "inconic/errors.hpp"
#include "inconic/scalar.hpp"

namespace inconic {

/// Exact Cartesian point or direction vector.
struct Vec2 {
    Scalar x, y;

    Vec2() : x(0), y(0) {}
    Vec2(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }

    std::string str() const;
};

inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
/// Rotation by +90 degrees.
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }
inline Scalar norm2(const Vec2& v) { return dot(v, v); }

namespace detail {
/// Canonical homogeneous triple: denominators cleared, integer gcd 1, first
/// nonzero coordinate positive. Projective equality becomes operator==.
std::array<Integer, 3> canonical_triple(const Scalar& a, const Scalar& b, const Scalar& c);
}  // namespace detail

/// Homogeneous barycentric point coordinates relative to a reference
/// triangle, identified up to nonzero scale. Stored in canonical form.
class HPoint {
public:
    HPoint(const Scalar& x, const Scalar& y, const Scalar& z)
        : c_(detail::canonical_triple(x, y, z)) {}
    HPoint(long x, long y, long z) : HPoint(Scalar(x), Scalar(y), Scalar(z)) {}

    const Integer& x() const { return c_[0]; }
    const Integer& y() const { return c_[1]; }
    const Integer& z() const { return c_[2]; }
    const Integer& operator[](int i) const { return c_[i]; }

    /// Coordinate sum zero: the point lies on the line at infinity.
    bool is_infinite() const { return sgn(Integer(c_[0] + c_[1] + c_[2])) == 0; }

    friend bool operator==(const HPoint& a, const HPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const HPoint& a, const HPoint& b) { return a.c_ != b.c_; }

    std::string str() const;

private:
    std::array<Integer, 3> c_;
};

/// Homogeneous line coordinates (l : m : n); incidence is l*x + m*y + n*z = 0.
/// Same canonical form and projective equality as HPoint.
class HLine {
public:
    HLine(const Scalar& l, const Scalar& m, const Scalar& n)
        : c_(detail::canonical_triple(l, m, n)) {}
    HLine(long l, long m, long n) : HLine(Scalar(l), Scalar(m), Scalar(n)) {}

    const Integer& l() const { return c_[0]; }
    const Integer& m() const { return c_[1]; }
    const Integer& n() const { return c_[2]; }
    const Integer& operator[](int i) const { return c_[i]; }

    friend bool operator==(const HLine& a, const HLine& b) { return a.c_ == b.c_; }
    friend bool operator!=(const HLine& a, const HLine& b) { return a.c_ != b.c_; }

    std::string str() const;

private:
    std::array<Integer, 3> c_;
};

std::ostream& operator<<(std::ostream& os, const HPoint& p);
std::ostream& operator<<(std::ostream& os, const HLine& l);

/// Reference triangle: exact Cartesian vertices plus the derived squared
/// side lengths a2 = |BC|^2, b2 = |CA|^2, c2 = |AB|^2.
class TriangleRef {
public:
    TriangleRef(Vec2 a, Vec2 b, Vec2 c);  // throws DegenerateTriangle

    const Vec2& A() const { return a_; }
    const Vec2& B() const { return b_; }
    const Vec2& C() const { return c_; }
    const Scalar& a2() const { return a2_; }
    const Scalar& b2() const { return b2_; }
    const Scalar& c2() const { return c2_; }

    /// Conway-style half-sums: s_a = (b2 + c2 - a2) / 2, etc. Their signs
    /// classify the angles exactly.
    Scalar s_a() const { return (b2_ + c2_ - a2_) / 2; }
    Scalar s_b() const { return (c2_ + a2_ - b2_) / 2; }
    Scalar s_c() const { return (a2_ + b2_ - c2_) / 2; }

    bool acute() const { return sgn(s_a()) > 0 && sgn(s_b()) > 0 && sgn(s_c()) > 0; }
    bool right() const { return sgn(s_a()) == 0 || sgn(s_b()) == 0 || sgn(s_c()) == 0; }

    Vec2 to_cartesian(const HPoint& p) const;  // throws PointAtInfinity
    HPoint to_barycentric(const Vec2& p) const;

    /// Exact squared Euclidean distance between two finite points.
    Scalar dist2(const HPoint& p, const HPoint& q) const;

    std::string str() const;

private:
    Vec2 a_, b_, c_;
    Scalar a2_, b2_, c2_;
};

// -- projective operations ---------------------------------------------------

HLine join(const HPoint& p, const HPoint& q);  // throws IdenticalPoints
HPoint meet(const HLine& l, const HLine& m);   // throws IdenticalLines

bool incident(const HPoint& p, const HLine& l);
bool collinear(const HPoint& p, const HPoint& q, const HPoint& r);
bool concurrent(const HLine& l, const HLine& m, const HLine& n);

/// The unique representative with coordinate sum 1. Throws PointAtInfinity.
std::array<Scalar, 3> normalize(const HPoint& p);

HPoint midpoint(const HPoint& p, const HPoint& q);   // throws PointAtInfinity
HPoint reflect(const HPoint& p, const HPoint& m);    // reflect p through m

inline HLine line_at_infinity() { return HLine(1, 1, 1); }

/// Direction of a line: its intersection with the line at infinity.
HPoint infinite_point(const HLine& l);  // throws IdenticalLines for l = l_inf

/// Line through p parallel to l, i.e. join(p, meet(l, l_inf)).
HLine parallel_through(const HPoint& p, const HLine& l);

/// Cartesian direction vector of a point at infinity (u:v:w), u+v+w = 0,
/// namely u*A + v*B + w*C.
Vec2 direction_of(const TriangleRef& t, const HPoint& at_infinity);

}  // namespace inconic
