#include "vdd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "vdd/error.hpp"

namespace vdd::geometry {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double dist(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Algebraic (Kasa) least-squares circle fit: x^2 + y^2 + D x + E y + F = 0.
bool kasa_fit(const std::vector<Point2>& pts, Circle& out) {
    double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, sxz = 0, syz = 0, sz = 0;
    const auto n = static_cast<double>(pts.size());
    for (const Point2& p : pts) {
        const double z = p.x * p.x + p.y * p.y;
        sxx += p.x * p.x;
        sxy += p.x * p.y;
        syy += p.y * p.y;
        sx += p.x;
        sy += p.y;
        sxz += p.x * z;
        syz += p.y * z;
        sz += z;
    }
    // Normal equations for (D, E, F).
    double a[3][4] = {
        {sxx, sxy, sx, -sxz},
        {sxy, syy, sy, -syz},
        {sx, sy, n, -sz},
    };
    for (int k = 0; k < 3; ++k) {
        int pivot = k;
        for (int i = k + 1; i < 3; ++i)
            if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
        if (std::abs(a[pivot][k]) < 1e-12) return false;
        std::swap(a[k], a[pivot]);
        for (int i = k + 1; i < 3; ++i) {
            const double f = a[i][k] / a[k][k];
            for (int j = k; j < 4; ++j) a[i][j] -= f * a[k][j];
        }
    }
    double sol[3];
    for (int i = 2; i >= 0; --i) {
        double acc = a[i][3];
        for (int j = i + 1; j < 3; ++j) acc -= a[i][j] * sol[j];
        sol[i] = acc / a[i][i];
    }
    const double cx = -sol[0] / 2.0, cy = -sol[1] / 2.0;
    const double r2 = cx * cx + cy * cy - sol[2];
    if (!(r2 > 0) || !std::isfinite(r2)) return false;
    out = Circle{{cx, cy}, std::sqrt(r2)};
    return true;
}

int count_inliers(const std::vector<Point2>& points, const Circle& c, double tol,
                  std::vector<int>* indices = nullptr) {
    int count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (std::abs(dist(points[i], c.center) - c.radius) <= tol) {
            ++count;
            if (indices) indices->push_back(static_cast<int>(i));
        }
    }
    return count;
}

double wrap_angle(double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0) theta += kTwoPi;
    return theta;
}

// Keeps vertices with keep_left(x) true, inserting the boundary intersection on
// crossing edges (half-plane clip against the vertical line x = boundary).
std::vector<Point2> clip_vertical(const std::vector<Point2>& vertices, double boundary,
                                  bool keep_left) {
    auto inside = [&](const Point2& p) { return keep_left ? p.x <= boundary : p.x >= boundary; };
    std::vector<Point2> out;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& cur = vertices[i];
        const Point2& nxt = vertices[(i + 1) % n];
        const bool cur_in = inside(cur);
        const bool nxt_in = inside(nxt);
        if (cur_in) out.push_back(cur);
        if (cur_in != nxt_in) {
            const double t = (boundary - cur.x) / (nxt.x - cur.x);
            out.push_back({boundary, cur.y + t * (nxt.y - cur.y)});
        }
    }
    // Drop consecutive duplicates introduced by clipping.
    std::vector<Point2> dedup;
    for (const Point2& p : out) {
        if (dedup.empty() || std::abs(dedup.back().x - p.x) > 1e-12 ||
            std::abs(dedup.back().y - p.y) > 1e-12)
            dedup.push_back(p);
    }
    while (dedup.size() >= 2 && std::abs(dedup.front().x - dedup.back().x) < 1e-12 &&
           std::abs(dedup.front().y - dedup.back().y) < 1e-12)
        dedup.pop_back();
    return dedup;
}

double shoelace_area(const std::vector<Point2>& v) {
    double acc = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return std::abs(acc) / 2.0;
}

Point2 rotate(const Point2& p, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

} // namespace

void validate_polygon(const Polygon& poly) {
    require(poly.vertices.size() >= 3, Errc::InvalidPolygon, "polygon needs >= 3 vertices");
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly.vertices[i];
        const Point2& b = poly.vertices[(i + 1) % n];
        require(std::isfinite(a.x) && std::isfinite(a.y), Errc::InvalidPolygon,
                "non-finite vertex");
        require(a.x != b.x || a.y != b.y, Errc::InvalidPolygon,
                "consecutive duplicate vertices");
    }
}

Circle circumcircle(const Point2& p1, const Point2& p2, const Point2& p3) {
    const double cross = (p2.x - p1.x) * (p3.y - p1.y) - (p3.x - p1.x) * (p2.y - p1.y);
    const double area = std::abs(cross) / 2.0;
    require(area >= 1e-12, Errc::DegenerateInput, "collinear points");

    const double d = 2.0 * (p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) + p3.x * (p1.y - p2.y));
    const double z1 = p1.x * p1.x + p1.y * p1.y;
    const double z2 = p2.x * p2.x + p2.y * p2.y;
    const double z3 = p3.x * p3.x + p3.y * p3.y;
    const double ux = (z1 * (p2.y - p3.y) + z2 * (p3.y - p1.y) + z3 * (p1.y - p2.y)) / d;
    const double uy = (z1 * (p3.x - p2.x) + z2 * (p1.x - p3.x) + z3 * (p2.x - p1.x)) / d;
    const Point2 center{ux, uy};
    return Circle{center, dist(center, p1)};
}

std::vector<Point2> extract_border_points(const GrayImage& image, double grad_threshold) {
    require(image.width >= 3 && image.height >= 3, Errc::ImageTooSmall,
            "extract_border_points needs >= 3x3");
    std::vector<Point2> out;
    for (int y = 1; y < image.height - 1; ++y) {
        for (int x = 1; x < image.width - 1; ++x) {
            const double gx = (static_cast<double>(image.at(x + 1, y)) - image.at(x - 1, y)) / 2.0;
            const double gy = (static_cast<double>(image.at(x, y + 1)) - image.at(x, y - 1)) / 2.0;
            if (std::hypot(gx, gy) >= grad_threshold)
                out.push_back({static_cast<double>(x), static_cast<double>(y)});
        }
    }
    require(!out.empty(), Errc::EmptyResult, "no pixel reaches the gradient threshold");
    return out;
}

RansacResult ransac_circle(const std::vector<Point2>& points, int iterations, double inlier_tol,
                           std::uint64_t seed) {
    require(points.size() >= 3, Errc::DegenerateInput, "ransac_circle needs >= 3 points");
    require(iterations >= 1, Errc::InvalidArgument, "iterations must be >= 1");
    require(inlier_tol > 0, Errc::InvalidArgument, "inlier_tol must be > 0");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);

    Circle best{};
    int best_count = 0;
    for (int it = 0; it < iterations; ++it) {
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        if (i == j || j == k || i == k) continue;
        Circle candidate;
        try {
            candidate = circumcircle(points[i], points[j], points[k]);
        } catch (const Error&) {
            continue; // collinear sample
        }
        const int count = count_inliers(points, candidate, inlier_tol);
        if (count > best_count) {
            best_count = count;
            best = candidate;
        }
    }
    require(best_count >= 3, Errc::NoModel, "no sampled triple reached 3 inliers");

    std::vector<int> consensus;
    count_inliers(points, best, inlier_tol, &consensus);
    std::vector<Point2> inlier_pts;
    inlier_pts.reserve(consensus.size());
    for (int idx : consensus) inlier_pts.push_back(points[idx]);

    Circle refit;
    if (kasa_fit(inlier_pts, refit)) {
        const int refit_count = count_inliers(points, refit, inlier_tol);
        if (refit_count >= 3) return {refit, refit_count};
    }
    return {best, best_count};
}

std::pair<double, double> polar_map(const Point2& point, const PolarConfig& cfg) {
    const double r = dist(point, cfg.center);
    require(r >= cfg.r_min && r <= cfg.r_max, Errc::OutOfAnnulus,
            "point radius outside [r_min, r_max]");
    const double theta = wrap_angle(std::atan2(point.y - cfg.center.y, point.x - cfg.center.x));
    const double row = (r - cfg.r_min) / (cfg.r_max - cfg.r_min) * (cfg.out_height - 1);
    const double col = theta / kTwoPi * cfg.out_width;
    return {row, col};
}

Point2 polar_unmap(double row, double col, const PolarConfig& cfg) {
    require(row >= 0.0 && row <= cfg.out_height - 1.0, Errc::OutOfRange,
            "row outside [0, out_height-1]");
    require(col >= 0.0 && col < static_cast<double>(cfg.out_width), Errc::OutOfRange,
            "col outside [0, out_width)");
    const double r = cfg.r_min + row / (cfg.out_height - 1) * (cfg.r_max - cfg.r_min);
    const double theta = col / cfg.out_width * kTwoPi;
    return {cfg.center.x + r * std::cos(theta), cfg.center.y + r * std::sin(theta)};
}

GrayImage polar_unwrap_image(const GrayImage& image, const PolarConfig& cfg) {
    require(cfg.r_min >= 0 && cfg.r_min < cfg.r_max && cfg.out_height >= 2 && cfg.out_width >= 2,
            Errc::InvalidConfig, "malformed polar config");
    const bool fits = cfg.center.x - cfg.r_max >= 0.0 && cfg.center.y - cfg.r_max >= 0.0 &&
                      cfg.center.x + cfg.r_max <= image.width - 1.0 &&
                      cfg.center.y + cfg.r_max <= image.height - 1.0;
    require(fits, Errc::InvalidConfig, "annulus exceeds image bounds");

    GrayImage out(cfg.out_width, cfg.out_height);
    for (int r = 0; r < cfg.out_height; ++r) {
        for (int c = 0; c < cfg.out_width; ++c) {
            const Point2 p = polar_unmap(r, c, cfg);
            const int x0 = static_cast<int>(std::floor(p.x));
            const int y0 = static_cast<int>(std::floor(p.y));
            const double fx = p.x - x0;
            const double fy = p.y - y0;
            auto sample = [&](int x, int y) -> double {
                if (x < 0 || y < 0 || x >= image.width || y >= image.height) return 0.0;
                return image.at(x, y);
            };
            const double v = (1 - fx) * (1 - fy) * sample(x0, y0) +
                             fx * (1 - fy) * sample(x0 + 1, y0) +
                             (1 - fx) * fy * sample(x0, y0 + 1) +
                             fx * fy * sample(x0 + 1, y0 + 1);
            out.at(c, r) = static_cast<std::uint8_t>(std::clamp<long>(std::lround(v), 0, 255));
        }
    }
    return out;
}

std::vector<Polygon> polygon_to_polar(const Polygon& poly, const PolarConfig& cfg) {
    validate_polygon(poly);
    const double W = cfg.out_width;

    // Map vertices and unwrap columns so consecutive gaps stay below W/2.
    std::vector<Point2> mapped; // x = unwrapped col, y = row
    mapped.reserve(poly.vertices.size());
    double prev_col = 0.0;
    double offset = 0.0;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        auto [row, col] = polar_map(poly.vertices[i], cfg);
        if (i > 0) {
            double d = col - prev_col;
            if (d > W / 2) offset -= W;
            else if (d < -W / 2) offset += W;
        }
        prev_col = col;
        mapped.push_back({col + offset, row});
    }
    // A polygon that winds around the center cannot land in the strip.
    {
        double d = mapped.front().x - (prev_col + offset);
        if (d > W / 2 || d < -W / 2)
            raise(Errc::InvalidPolygon, "polygon winds around the polar center");
    }

    double min_c = mapped.front().x, max_c = mapped.front().x;
    for (const Point2& p : mapped) {
        min_c = std::min(min_c, p.x);
        max_c = std::max(max_c, p.x);
    }
    const double shift = -std::floor(min_c / W) * W;
    for (Point2& p : mapped) p.x += shift;
    max_c += shift;

    if (max_c <= W) return {Polygon{std::move(mapped)}};

    // Crosses the seam at column W: clip both sides, rebase the right part to 0.
    std::vector<Point2> left = clip_vertical(mapped, W, true);
    std::vector<Point2> right = clip_vertical(mapped, W, false);
    for (Point2& p : right) p.x -= W;

    std::vector<Polygon> parts;
    for (auto* side : {&right, &left}) { // low-column part first
        if (side->size() >= 3 && shoelace_area(*side) > 1e-9)
            parts.push_back(Polygon{std::move(*side)});
    }
    return parts;
}

BBox polygon_bbox(const Polygon& poly) {
    validate_polygon(poly);
    BBox box{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
             std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const Point2& p : poly.vertices) {
        box.x_min = std::min(box.x_min, p.x);
        box.y_min = std::min(box.y_min, p.y);
        box.x_max = std::max(box.x_max, p.x);
        box.y_max = std::max(box.y_max, p.y);
    }
    require(box.x_min < box.x_max && box.y_min < box.y_max, Errc::InvalidPolygon,
            "degenerate bounding box");
    return box;
}

double polygon_area(const Polygon& poly) {
    validate_polygon(poly);
    return shoelace_area(poly.vertices);
}

double fill_rate(const Polygon& poly) {
    const BBox box = polygon_bbox(poly);
    const double area = shoelace_area(poly.vertices);
    require(std::isfinite(area) && area > 0.0, Errc::InvalidPolygon,
            "polygon area is zero or not finite");
    return area / box.area();
}

Polygon transfer_polygon(const Polygon& poly, const PlanarView& from, const PlanarView& to) {
    validate_polygon(poly);
    require(from.scale > 0 && to.scale > 0, Errc::InvalidArgument, "view scale must be > 0");
    if (from.offset == to.offset && from.scale == to.scale && from.rotation == to.rotation)
        return poly; // identical views transfer exactly

    Polygon out;
    out.vertices.reserve(poly.vertices.size());
    for (const Point2& p : poly.vertices) {
        // image -> part plane under `from`
        Point2 world = rotate({p.x * from.scale, p.y * from.scale}, from.rotation);
        world.x += from.offset.x;
        world.y += from.offset.y;
        // part plane -> image under `to`
        Point2 rel{world.x - to.offset.x, world.y - to.offset.y};
        rel = rotate(rel, -to.rotation);
        out.vertices.push_back({rel.x / to.scale, rel.y / to.scale});
    }
    return out;
}

} // namespace vdd::geometry
