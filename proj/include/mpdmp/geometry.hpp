#ifndef MPDMP_GEOMETRY_HPP
#define MPDMP_GEOMETRY_HPP

#include <vector>

namespace mpdmp::geom {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

double distance(Point2 a, Point2 b);
double cross(Point2 o, Point2 a, Point2 b);

/// A convex region: empty (no vertices), a point, a segment, or a convex
/// polygon with counter-clockwise vertices.
using ConvexRegion = std::vector<Point2>;

/// Andrew monotone chain. Collinear inputs collapse to a segment, coincident
/// inputs to a point. Polygon output is CCW without repeated endpoint.
ConvexRegion convex_hull(std::vector<Point2> points);

/// Intersection of two convex regions. Handles all degeneracy combinations
/// (point/segment/polygon on either side); polygon-polygon pairs use
/// Sutherland-Hodgman clipping. Results with area (or length) below `tol`
/// collapse to segments or points.
ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b,
                       double tol = 1e-9);

double polygon_area(const ConvexRegion& poly);
bool contains(const ConvexRegion& region, Point2 p, double tol = 1e-9);
double distance_to_region(const ConvexRegion& region, Point2 p);

}  // namespace mpdmp::geom

#endif
