#include "mpdmp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mpdmp::geom {

double distance(Point2 a, Point2 b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

namespace {

constexpr double kGeomTol = 1e-9;

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    Point2 d = b - a;
    double len2 = d.x * d.x + d.y * d.y;
    if (len2 == 0.0) return distance(p, a);
    double t = ((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + t * d);
}

/// Collapses a vertex soup to its canonical region: point, segment along the
/// diameter when (near-)degenerate, or a convex polygon.
ConvexRegion canonicalize(std::vector<Point2> pts, double tol) {
    if (pts.empty()) return {};
    ConvexRegion hull = convex_hull(std::move(pts));
    if (hull.size() <= 2) return hull;
    if (std::abs(polygon_area(hull)) > tol) return hull;
    // Degenerate polygon: keep the two farthest-apart vertices.
    std::size_t bi = 0, bj = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        for (std::size_t j = i + 1; j < hull.size(); ++j) {
            double d = distance(hull[i], hull[j]);
            if (d > best) { best = d; bi = i; bj = j; }
        }
    }
    if (best <= tol) return {hull[bi]};
    return {hull[bi], hull[bj]};
}

ConvexRegion clip_polygon(const ConvexRegion& subject, const ConvexRegion& clip,
                          double tol) {
    // Sutherland-Hodgman against each CCW edge of `clip`.
    ConvexRegion output = subject;
    const std::size_t n = clip.size();
    for (std::size_t e = 0; e < n && !output.empty(); ++e) {
        Point2 ca = clip[e];
        Point2 cb = clip[(e + 1) % n];
        ConvexRegion input = std::move(output);
        output.clear();
        const std::size_t m = input.size();
        for (std::size_t i = 0; i < m; ++i) {
            Point2 cur = input[i];
            Point2 nxt = input[(i + 1) % m];
            double side_cur = cross(ca, cb, cur);
            double side_nxt = cross(ca, cb, nxt);
            bool in_cur = side_cur >= -tol;
            bool in_nxt = side_nxt >= -tol;
            if (in_cur) output.push_back(cur);
            if (in_cur != in_nxt) {
                double denom = side_cur - side_nxt;
                if (std::abs(denom) > 0.0) {
                    double t = side_cur / denom;
                    output.push_back(cur + t * (nxt - cur));
                }
            }
        }
    }
    return canonicalize(std::move(output), tol);
}

ConvexRegion clip_segment(Point2 a, Point2 b, const ConvexRegion& poly,
                          double tol) {
    // Parametric clip of [a,b] against the CCW half-planes of `poly`.
    double t_lo = 0.0, t_hi = 1.0;
    const std::size_t n = poly.size();
    for (std::size_t e = 0; e < n; ++e) {
        Point2 ca = poly[e];
        Point2 cb = poly[(e + 1) % n];
        double sa = cross(ca, cb, a);
        double sb = cross(ca, cb, b);
        double denom = sa - sb;  // positive side is inside
        if (std::abs(denom) <= tol) {
            if (sa < -tol) return {};  // parallel and outside
            continue;
        }
        double t = sa / denom;
        if (denom > 0.0) t_hi = std::min(t_hi, t);
        else t_lo = std::max(t_lo, t);
        if (t_lo > t_hi + tol) return {};
    }
    Point2 p = a + t_lo * (b - a);
    Point2 q = a + t_hi * (b - a);
    if (distance(p, q) <= tol) return {p};
    return {p, q};
}

ConvexRegion segment_segment(Point2 a0, Point2 a1, Point2 b0, Point2 b1,
                             double tol) {
    Point2 da = a1 - a0;
    Point2 db = b1 - b0;
    double denom = da.x * db.y - da.y * db.x;
    if (std::abs(denom) > tol) {
        double t = ((b0.x - a0.x) * db.y - (b0.y - a0.y) * db.x) / denom;
        double s = ((b0.x - a0.x) * da.y - (b0.y - a0.y) * da.x) / denom;
        if (t < -tol || t > 1.0 + tol || s < -tol || s > 1.0 + tol) return {};
        return {a0 + t * da};
    }
    // Parallel: no overlap unless collinear.
    if (std::abs(cross(a0, a1, b0)) > tol) return {};
    double len2 = da.x * da.x + da.y * da.y;
    auto param = [&](Point2 p) {
        return ((p.x - a0.x) * da.x + (p.y - a0.y) * da.y) / len2;
    };
    double u0 = param(b0), u1 = param(b1);
    if (u0 > u1) std::swap(u0, u1);
    double lo = std::max(0.0, u0), hi = std::min(1.0, u1);
    if (lo > hi + tol) return {};
    Point2 p = a0 + lo * da;
    Point2 q = a0 + hi * da;
    if (distance(p, q) <= tol) return {p};
    return {p, q};
}

}  // namespace

ConvexRegion convex_hull(std::vector<Point2> points) {
    std::sort(points.begin(), points.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [](Point2 a, Point2 b) {
                                 return distance(a, b) <= kGeomTol;
                             }),
                 points.end());
    const std::size_t n = points.size();
    if (n <= 2) return points;
    ConvexRegion hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 &&
               cross(hull[k - 2], hull[k - 1], points[i]) <= kGeomTol)
            --k;
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper
        while (k >= lower &&
               cross(hull[k - 2], hull[k - 1], points[i]) <= kGeomTol)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && distance(hull[0], hull[1]) <= kGeomTol)
        hull.resize(1);
    return hull;
}

double polygon_area(const ConvexRegion& poly) {
    double acc = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point2 a = poly[i];
        Point2 b = poly[(i + 1) % n];
        acc += a.x * b.y - a.y * b.x;
    }
    return 0.5 * acc;
}

bool contains(const ConvexRegion& region, Point2 p, double tol) {
    if (region.empty()) return false;
    if (region.size() == 1) return distance(region[0], p) <= tol;
    if (region.size() == 2)
        return point_segment_distance(p, region[0], region[1]) <= tol;
    const std::size_t n = region.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(region[i], region[(i + 1) % n], p) < -tol) return false;
    }
    return true;
}

double distance_to_region(const ConvexRegion& region, Point2 p) {
    if (region.empty()) return std::numeric_limits<double>::infinity();
    if (region.size() == 1) return distance(region[0], p);
    if (region.size() == 2)
        return point_segment_distance(p, region[0], region[1]);
    if (contains(region, p)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = region.size();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, point_segment_distance(p, region[i],
                                                     region[(i + 1) % n]));
    }
    return best;
}

ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b,
                       double tol) {
    if (a.empty() || b.empty()) return {};
    if (a.size() == 1) return contains(b, a[0], tol) ? a : ConvexRegion{};
    if (b.size() == 1) return contains(a, b[0], tol) ? b : ConvexRegion{};
    if (a.size() == 2 && b.size() == 2)
        return segment_segment(a[0], a[1], b[0], b[1], tol);
    if (a.size() == 2) return clip_segment(a[0], a[1], b, tol);
    if (b.size() == 2) return clip_segment(b[0], b[1], a, tol);
    return clip_polygon(a, b, tol);
}

}  // namespace mpdmp::geom
