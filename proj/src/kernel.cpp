#include "inconic/kernel.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace inconic {

Scalar parse_scalar(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

std::string Vec2::str() const { return "(" + to_string(x) + ", " + to_string(y) + ")"; }

namespace detail {

std::array<Integer, 3> canonical_triple(const Scalar& a, const Scalar& b, const Scalar& c) {
    Integer den = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
    std::array<Integer, 3> v = {a.get_num() * (den / a.get_den()),
                                b.get_num() * (den / b.get_den()),
                                c.get_num() * (den / c.get_den())};
    Integer g = gcd(gcd(v[0], v[1]), v[2]);
    if (sgn(g) == 0) throw std::invalid_argument("zero homogeneous triple");
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

}  // namespace detail

std::string HPoint::str() const {
    return "(" + to_string(c_[0]) + " : " + to_string(c_[1]) + " : " + to_string(c_[2]) + ")";
}

std::string HLine::str() const {
    return "[" + to_string(c_[0]) + " : " + to_string(c_[1]) + " : " + to_string(c_[2]) + "]";
}

std::ostream& operator<<(std::ostream& os, const HPoint& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const HLine& l) { return os << l.str(); }

namespace {

std::array<Integer, 3> cross3(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Integer det3(const Integer& a0, const Integer& a1, const Integer& a2,
             const Integer& b0, const Integer& b1, const Integer& b2,
             const Integer& c0, const Integer& c1, const Integer& c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

}  // namespace

HLine join(const HPoint& p, const HPoint& q) {
    auto c = cross3({p[0], p[1], p[2]}, {q[0], q[1], q[2]});
    if (sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0) throw IdenticalPoints();
    return HLine(Scalar(c[0]), Scalar(c[1]), Scalar(c[2]));
}

HPoint meet(const HLine& l, const HLine& m) {
    auto c = cross3({l[0], l[1], l[2]}, {m[0], m[1], m[2]});
    if (sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0) throw IdenticalLines();
    return HPoint(Scalar(c[0]), Scalar(c[1]), Scalar(c[2]));
}

bool incident(const HPoint& p, const HLine& l) {
    return sgn(Integer(p[0] * l[0] + p[1] * l[1] + p[2] * l[2])) == 0;
}

bool collinear(const HPoint& p, const HPoint& q, const HPoint& r) {
    return sgn(det3(p[0], p[1], p[2], q[0], q[1], q[2], r[0], r[1], r[2])) == 0;
}

bool concurrent(const HLine& l, const HLine& m, const HLine& n) {
    return sgn(det3(l[0], l[1], l[2], m[0], m[1], m[2], n[0], n[1], n[2])) == 0;
}

std::array<Scalar, 3> normalize(const HPoint& p) {
    Integer s = p[0] + p[1] + p[2];
    if (sgn(s) == 0) throw PointAtInfinity();
    auto part = [&s](const Integer& c) {
        Scalar q(c, s);
        q.canonicalize();
        return q;
    };
    return {part(p[0]), part(p[1]), part(p[2])};
}

HPoint midpoint(const HPoint& p, const HPoint& q) {
    Integer sp = p[0] + p[1] + p[2];
    Integer sq = q[0] + q[1] + q[2];
    if (sgn(sp) == 0 || sgn(sq) == 0) throw PointAtInfinity();
    // (norm(p) + norm(q)) / 2, with the homogeneous factor 2*sp*sq dropped.
    return HPoint(Scalar(sq * p[0] + sp * q[0]), Scalar(sq * p[1] + sp * q[1]),
                  Scalar(sq * p[2] + sp * q[2]));
}

HPoint reflect(const HPoint& p, const HPoint& m) {
    Integer sp = p[0] + p[1] + p[2];
    Integer sm = m[0] + m[1] + m[2];
    if (sgn(sp) == 0 || sgn(sm) == 0) throw PointAtInfinity();
    // 2*norm(m) - norm(p), scaled by sp*sm.
    return HPoint(Scalar(2 * sp * m[0] - sm * p[0]), Scalar(2 * sp * m[1] - sm * p[1]),
                  Scalar(2 * sp * m[2] - sm * p[2]));
}

HPoint infinite_point(const HLine& l) { return meet(l, line_at_infinity()); }

HLine parallel_through(const HPoint& p, const HLine& l) {
    if (p.is_infinite()) throw PointAtInfinity();
    return join(p, infinite_point(l));
}

Vec2 direction_of(const TriangleRef& t, const HPoint& at_infinity) {
    const HPoint& d = at_infinity;
    Scalar u(d[0]), v(d[1]), w(d[2]);
    return {u * t.A().x + v * t.B().x + w * t.C().x, u * t.A().y + v * t.B().y + w * t.C().y};
}

namespace {

Scalar signed_area2(const Vec2& p, const Vec2& q, const Vec2& r) {
    return cross(q - p, r - p);
}

}  // namespace

TriangleRef::TriangleRef(Vec2 a, Vec2 b, Vec2 c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      a2_(norm2(b_ - c_)), b2_(norm2(c_ - a_)), c2_(norm2(a_ - b_)) {
    if (sgn(signed_area2(a_, b_, c_)) == 0) throw DegenerateTriangle();
}

Vec2 TriangleRef::to_cartesian(const HPoint& p) const {
    auto n = normalize(p);
    return {n[0] * a_.x + n[1] * b_.x + n[2] * c_.x, n[0] * a_.y + n[1] * b_.y + n[2] * c_.y};
}

HPoint TriangleRef::to_barycentric(const Vec2& p) const {
    return HPoint(signed_area2(p, b_, c_), signed_area2(a_, p, c_), signed_area2(a_, b_, p));
}

Scalar TriangleRef::dist2(const HPoint& p, const HPoint& q) const {
    return norm2(to_cartesian(p) - to_cartesian(q));
}

std::string TriangleRef::str() const {
    return "A=" + a_.str() + " B=" + b_.str() + " C=" + c_.str();
}

}  // namespace inconic
