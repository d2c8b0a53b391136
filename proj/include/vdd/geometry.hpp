#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vdd/image.hpp"

namespace vdd::geometry {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2&) const = default;
};

struct Circle {
    Point2 center;
    double radius = 0.0; // > 0
};

/// Ordered vertex list, >= 3 vertices, no two consecutive vertices identical.
struct Polygon {
    std::vector<Point2> vertices;
};

struct BBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
};

/// Annulus-to-rectangle mapping. Rows run over radius (r_min -> row 0,
/// r_max -> row out_height-1), columns over angle (theta 0 -> col 0, up to
/// 2*pi -> col out_width). Angle origin is +x in image coordinates,
/// increasing clockwise on screen (y-down atan2 convention).
struct PolarConfig {
    Point2 center;
    double r_min = 0.0;
    double r_max = 0.0;
    int out_height = 800;
    int out_width = 1333;
};

/// Fronto-parallel similarity camera model: a view maps image coordinates to
/// the part plane as world = offset + scale * R(rotation) * p.
struct PlanarView {
    Point2 offset;
    double scale = 1.0;
    double rotation = 0.0; // radians
};

/// Circle through three points. Throws Errc::DegenerateInput for collinear
/// input (triangle area below 1e-12 px^2).
Circle circumcircle(const Point2& p1, const Point2& p2, const Point2& p3);

/// Pixel centers whose central-difference gradient magnitude is >= grad_threshold.
/// Throws Errc::EmptyResult when no pixel qualifies, Errc::ImageTooSmall below 3x3.
std::vector<Point2> extract_border_points(const GrayImage& image, double grad_threshold);

struct RansacResult {
    Circle circle;
    int inlier_count = 0;
};

/// RANSAC circle fit: samples point triples, scores by |dist - r| <= inlier_tol,
/// refits the best consensus set with an algebraic least-squares (Kasa) fit.
/// Deterministic in seed. Throws Errc::DegenerateInput (<3 points) or
/// Errc::NoModel (no sampled triple reaches 3 inliers).
RansacResult ransac_circle(const std::vector<Point2>& points, int iterations,
                           double inlier_tol, std::uint64_t seed);

/// Forward polar mapping; returns (row, col). Throws Errc::OutOfAnnulus when
/// the point's radius falls outside [r_min, r_max].
std::pair<double, double> polar_map(const Point2& point, const PolarConfig& cfg);

/// Inverse of polar_map. Domain: 0 <= row <= out_height-1, 0 <= col < out_width.
/// Throws Errc::OutOfRange outside that domain.
Point2 polar_unmap(double row, double col, const PolarConfig& cfg);

/// Resamples the annulus into an out_height x out_width rectangle with bilinear
/// interpolation; samples outside the source image read as 0. Throws
/// Errc::InvalidConfig when the annulus does not fit inside the image.
GrayImage polar_unwrap_image(const GrayImage& image, const PolarConfig& cfg);

/// Maps a Cartesian polygon into polar pixel coordinates (x = col, y = row).
/// Returns one polygon, or two when the input crosses the theta=0 seam
/// (consecutive column gap above out_width/2); the seam-split parts touch
/// columns 0 and out_width respectively.
std::vector<Polygon> polygon_to_polar(const Polygon& poly, const PolarConfig& cfg);

/// Axis-aligned bounds of the vertices. Throws Errc::InvalidPolygon when the
/// extent degenerates (zero width or height).
BBox polygon_bbox(const Polygon& poly);

/// Shoelace polygon area (absolute value).
double polygon_area(const Polygon& poly);

/// Polygon area divided by bounding-box area, in (0, 1].
/// Throws Errc::InvalidPolygon for zero/NaN area or degenerate bbox.
double fill_rate(const Polygon& poly);

/// Re-expresses a polygon annotated in view `from` in the image frame of view
/// `to` (applies to^-1 after from, vertex-wise).
Polygon transfer_polygon(const Polygon& poly, const PlanarView& from, const PlanarView& to);

void validate_polygon(const Polygon& poly);

} // namespace vdd::geometry
