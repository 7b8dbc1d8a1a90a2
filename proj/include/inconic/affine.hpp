#pragma once

#include <Eigen/Dense>

#include "inconic/conic.hpp"
#include "inconic/kernel.hpp"

namespace inconic {

/// Invertible affine map of the Cartesian plane, u = L p + t. This is the
/// only floating-point layer of the project; it witnesses the affine
/// reduction of the theory, while all theorem checks stay exact upstream.
struct AffineMap {
    Eigen::Matrix2d L;
    Eigen::Vector2d t;

    static AffineMap identity();
};

/// Cartesian conic in homogeneous coordinates (x, y, 1).
struct CartConic {
    Eigen::Matrix3d N;  // symmetric

    Eigen::Matrix2d quadratic_part() const { return N.topLeftCorner<2, 2>(); }
    double value(const Eigen::Vector2d& p) const;
    /// Center of a central conic: solve of the gradient system.
    Eigen::Vector2d center() const;
};

struct NumericTriangle {
    Eigen::Vector2d A, B, C;

    Eigen::Vector2d centroid() const { return (A + B + C) / 3.0; }
    /// Squared side lengths (a2, b2, c2) = (|BC|^2, |CA|^2, |AB|^2).
    Eigen::Vector3d squared_sides() const;
    Eigen::Vector2d symmedian_point() const;
};

Eigen::Vector2d to_numeric(const Vec2& v);
NumericTriangle to_numeric(const TriangleRef& t);

/// Barycentric conic matrix pushed to the Cartesian chart of t.
CartConic cartesian_form(const Conic& c, const TriangleRef& t);

/// Unnormalized barycentric coordinates of p with respect to a numeric
/// triangle (signed areas), scaled to sum 1.
Eigen::Vector3d numeric_barycentric(const NumericTriangle& t, const Eigen::Vector2d& p);
Eigen::Vector2d numeric_bary_to_cart(const NumericTriangle& t, const Eigen::Vector3d& bary);

/// Affine map whose image of the given ellipse is a circle (symmetric
/// square root of the quadratic part). Determined up to similarity; assert
/// properties of images, never of coefficients.
AffineMap ellipse_to_circle(const Conic& c, const TriangleRef& t);  // throws NotAnEllipse

Eigen::Vector2d apply(const AffineMap& m, const Eigen::Vector2d& p);
NumericTriangle apply(const AffineMap& m, const NumericTriangle& t);
NumericTriangle apply(const AffineMap& m, const TriangleRef& t);
CartConic apply(const AffineMap& m, const CartConic& c);

AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// Residuals of the affine-invariance checks: images of centroid, isotomic
/// conjugate, complement and inconic center versus their recomputation in
/// the image triangle. All relative to max(1, magnitudes).
struct AffineInvariantReport {
    double centroid_residual;
    double isotomic_residual;
    double complement_residual;
    double inconic_center_residual;

    double max_residual() const;
};

AffineInvariantReport verify_affine_invariants(const AffineMap& m, const TriangleRef& t,
                                               const HPoint& p);

}  // namespace inconic
