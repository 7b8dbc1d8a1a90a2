#include "inconic/affine.hpp"

#include <algorithm>
#include <cmath>

namespace inconic {

namespace {

constexpr double kDetGuard = 1e-12;

double rel_dist(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

}  // namespace

AffineMap AffineMap::identity() {
    return {Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero()};
}

double CartConic::value(const Eigen::Vector2d& p) const {
    Eigen::Vector3d h(p.x(), p.y(), 1.0);
    return h.dot(N * h);
}

Eigen::Vector2d CartConic::center() const {
    return quadratic_part().colPivHouseholderQr().solve(-N.topRightCorner<2, 1>());
}

Eigen::Vector3d NumericTriangle::squared_sides() const {
    return {(B - C).squaredNorm(), (C - A).squaredNorm(), (A - B).squaredNorm()};
}

Eigen::Vector2d NumericTriangle::symmedian_point() const {
    Eigen::Vector3d s = squared_sides();
    return (s.x() * A + s.y() * B + s.z() * C) / s.sum();
}

Eigen::Vector2d to_numeric(const Vec2& v) { return {to_double(v.x), to_double(v.y)}; }

NumericTriangle to_numeric(const TriangleRef& t) {
    return {to_numeric(t.A()), to_numeric(t.B()), to_numeric(t.C())};
}

CartConic cartesian_form(const Conic& c, const TriangleRef& t) {
    // Rows of the linear map (x, y, 1) -> unnormalized barycentrics.
    auto row = [](const Vec2& p, const Vec2& q) {
        return Eigen::RowVector3d(to_double(p.y) - to_double(q.y),
                                  to_double(q.x) - to_double(p.x),
                                  to_double(p.x) * to_double(q.y) - to_double(p.y) * to_double(q.x));
    };
    Eigen::Matrix3d B;
    B.row(0) = row(t.B(), t.C());
    B.row(1) = row(t.C(), t.A());
    B.row(2) = row(t.A(), t.B());
    Eigen::Matrix3d M;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M(i, j) = c.at(i, j).get_d();
    // Normalize so the magnitudes stay comparable across inputs.
    M /= M.cwiseAbs().maxCoeff();
    return {B.transpose() * M * B};
}

Eigen::Vector3d numeric_barycentric(const NumericTriangle& t, const Eigen::Vector2d& p) {
    auto area = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c) {
        return (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
    };
    Eigen::Vector3d bary(area(p, t.B, t.C), area(t.A, p, t.C), area(t.A, t.B, p));
    return bary / bary.sum();
}

Eigen::Vector2d numeric_bary_to_cart(const NumericTriangle& t, const Eigen::Vector3d& bary) {
    Eigen::Vector3d n = bary / bary.sum();
    return n.x() * t.A + n.y() * t.B + n.z() * t.C;
}

AffineMap ellipse_to_circle(const Conic& c, const TriangleRef& t) {
    if (classify(c) != ConicClass::Ellipse) throw NotAnEllipse();
    CartConic n = cartesian_form(c, t);
    Eigen::Matrix2d q = n.quadratic_part();
    if (q.trace() < 0) q = -q;  // make the definite form positive
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(q);
    Eigen::Vector2d ev = eig.eigenvalues();
    if (ev.minCoeff() <= 0) throw NotAnEllipse();
    Eigen::Matrix2d sqrt_q =
        eig.eigenvectors() * ev.cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();
    // Scale to keep coordinates near the input's magnitude; any similarity
    // post-factor is legitimate.
    sqrt_q /= std::sqrt(ev.maxCoeff());
    AffineMap m{sqrt_q, Eigen::Vector2d::Zero()};
    if (std::abs(m.L.determinant()) <= kDetGuard) throw NotAnEllipse();
    return m;
}

Eigen::Vector2d apply(const AffineMap& m, const Eigen::Vector2d& p) { return m.L * p + m.t; }

NumericTriangle apply(const AffineMap& m, const NumericTriangle& t) {
    return {apply(m, t.A), apply(m, t.B), apply(m, t.C)};
}

NumericTriangle apply(const AffineMap& m, const TriangleRef& t) {
    return apply(m, to_numeric(t));
}

CartConic apply(const AffineMap& m, const CartConic& c) {
    Eigen::Matrix3d g = Eigen::Matrix3d::Identity();
    g.topLeftCorner<2, 2>() = m.L;
    g.topRightCorner<2, 1>() = m.t;
    Eigen::Matrix3d gi = g.inverse();
    return {gi.transpose() * c.N * gi};
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    return {outer.L * inner.L, outer.L * inner.t + outer.t};
}

double AffineInvariantReport::max_residual() const {
    return std::max({centroid_residual, isotomic_residual, complement_residual,
                     inconic_center_residual});
}

AffineInvariantReport verify_affine_invariants(const AffineMap& m, const TriangleRef& t,
                                               const HPoint& p) {
    NumericTriangle src = to_numeric(t);
    NumericTriangle img = apply(m, src);

    AffineInvariantReport r{};
    r.centroid_residual = rel_dist(apply(m, src.centroid()), img.centroid());

    Eigen::Vector2d p_img = apply(m, to_numeric(t.to_cartesian(p)));
    Eigen::Vector3d p_img_bary = numeric_barycentric(img, p_img);

    auto image_of = [&](const HPoint& q) { return apply(m, to_numeric(t.to_cartesian(q))); };

    Eigen::Vector3d iso_bary = p_img_bary.cwiseInverse();
    r.isotomic_residual =
        rel_dist(image_of(isotomic_conjugate(p)), numeric_bary_to_cart(img, iso_bary));

    Eigen::Vector3d comp_bary(p_img_bary.y() + p_img_bary.z(), p_img_bary.z() + p_img_bary.x(),
                              p_img_bary.x() + p_img_bary.y());
    r.complement_residual =
        rel_dist(image_of(complement(p)), numeric_bary_to_cart(img, comp_bary));

    Conic inc = inconic_from_perspector(p);
    CartConic inc_img = apply(m, cartesian_form(inc, t));
    r.inconic_center_residual = rel_dist(image_of(conic_center(inc)), inc_img.center());
    return r;
}

}  // namespace inconic
