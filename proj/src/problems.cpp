#include "mpdmp/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpdmp {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::vector<TargetPoint> rectangle_corners(double x0, double y0, double x1,
                                           double y1) {
    return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

/// Regular polygon centered at the origin, first vertex at angle 90 degrees.
std::vector<TargetPoint> regular_polygon(std::size_t sides, double circumradius) {
    std::vector<TargetPoint> pts;
    pts.reserve(sides);
    for (std::size_t i = 0; i < sides; ++i) {
        double angle = std::numbers::pi / 2.0 +
                       2.0 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(sides);
        pts.push_back({circumradius * std::cos(angle),
                       circumradius * std::sin(angle)});
    }
    return pts;
}

MpDmpProblem make_problem(int id,
                          std::vector<std::vector<TargetPoint>> party_targets) {
    std::vector<std::size_t> sizes;
    std::vector<std::vector<TargetPoint>> per_objective;
    for (const auto& targets : party_targets) {
        sizes.push_back(targets.size());
        for (const auto& p : targets) per_objective.push_back({p});
    }
    return MpDmpProblem{id, "MPDMP" + std::to_string(id), PartyLayout(sizes),
                        std::move(per_objective), Bounds{}};
}

}  // namespace

double Bounds::clamp(double v) const { return std::clamp(v, lo, hi); }

PsRegion region_from_vertices(geom::ConvexRegion vertices) {
    PsRegion r;
    r.vertices = std::move(vertices);
    switch (r.vertices.size()) {
        case 0: throw std::runtime_error("empty Pareto region");
        case 1: r.kind = PsKind::Point; break;
        case 2: r.kind = PsKind::Segment; break;
        default: r.kind = PsKind::ConvexPolygon; break;
    }
    return r;
}

ObjectiveVector evaluate(const MpDmpProblem& problem, DecisionVector x) {
    if (!problem.bounds.inside(x.x1) || !problem.bounds.inside(x.x2)) {
        throw std::invalid_argument("evaluate: decision vector out of bounds");
    }
    ObjectiveVector f;
    f.reserve(problem.objective_targets.size());
    Point2 p{x.x1, x.x2};
    for (const auto& targets : problem.objective_targets) {
        double best = kInfinity;
        for (const auto& t : targets) best = std::min(best, geom::distance(p, t));
        f.push_back(best);
    }
    return f;
}

MpDmpProblem suite(int id) {
    switch (id) {
        case 1:  // two crossing diagonal segments
            return make_problem(1, {{{-2, -2}, {2, 2}}, {{-2, 2}, {2, -2}}});
        case 2:  // two crossing axis-aligned segments
            return make_problem(2, {{{-2, 0}, {2, 0}}, {{0, -2}, {0, 2}}});
        case 3:  // segment through a triangle
            return make_problem(3, {{{-2, 1}, {2, 1}},
                                    {{-2, 0}, {2, 0}, {0, 4}}});
        case 4:  // equilateral triangles touching at the shared apex
            return make_problem(4, {{{0, 0}, {4, 0}, {2, 2 * kSqrt3}},
                                    {{2, 2 * kSqrt3}, {0, 4 * kSqrt3},
                                     {4, 4 * kSqrt3}}});
        case 5:  // overlapping equilateral triangles
            return make_problem(5, {{{0, 0}, {4, 0}, {2, 2 * kSqrt3}},
                                    {{0, kSqrt3}, {4, kSqrt3}, {2, 3 * kSqrt3}}});
        case 6:  // rectangles sharing the edge y = 2
            return make_problem(6, {rectangle_corners(0, 0, 4, 2),
                                    rectangle_corners(0, 2, 4, 4)});
        case 7:  // overlapping squares
            return make_problem(7, {rectangle_corners(0, 0, 4, 4),
                                    rectangle_corners(2, 2, 6, 6)});
        case 8:  // nested regular pentagons
            return make_problem(8, {regular_polygon(5, 4.0),
                                    regular_polygon(5, 2.0)});
        default:
            throw std::invalid_argument("suite: id must be in 1..8");
    }
}

PsRegion true_ps(int id) {
    switch (id) {
        case 1:
        case 2:
            return {PsKind::Point, {{0, 0}}};
        case 3:
            return {PsKind::Segment, {{-1.5, 1}, {1.5, 1}}};
        case 4:
            return {PsKind::Point, {{2, 2 * kSqrt3}}};
        case 5:
            return {PsKind::ConvexPolygon,
                    {{1, kSqrt3}, {3, kSqrt3}, {2, 2 * kSqrt3}}};
        case 6:
            return {PsKind::Segment, {{0, 2}, {4, 2}}};
        case 7:
            return {PsKind::ConvexPolygon, {{2, 2}, {4, 2}, {4, 4}, {2, 4}}};
        case 8:
            return region_from_vertices(geom::convex_hull(regular_polygon(5, 2.0)));
        default:
            throw std::invalid_argument("true_ps: id must be in 1..8");
    }
}

PsRegion ps_oracle(const MpDmpProblem& problem) {
    geom::ConvexRegion common;
    for (std::size_t party = 0; party < problem.layout.num_parties(); ++party) {
        const IndexRange range = problem.layout.party(party);
        std::vector<Point2> targets;
        for (std::size_t obj = range.begin; obj < range.end; ++obj) {
            const auto& set = problem.objective_targets[obj];
            targets.insert(targets.end(), set.begin(), set.end());
        }
        geom::ConvexRegion party_ps = geom::convex_hull(std::move(targets));
        common = (party == 0) ? party_ps : geom::intersect(common, party_ps);
        if (common.empty()) {
            throw std::runtime_error(problem.name +
                                     ": no common Pareto solution");
        }
    }
    return region_from_vertices(std::move(common));
}

std::vector<Point2> sample_ps_points(const PsRegion& region, std::size_t n) {
    switch (region.kind) {
        case PsKind::Point:
            return {region.vertices[0]};
        case PsKind::Segment: {
            Point2 a = region.vertices[0];
            Point2 b = region.vertices[1];
            if (n == 1) return {a};
            std::vector<Point2> pts;
            pts.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                double t = static_cast<double>(i) / static_cast<double>(n - 1);
                pts.push_back(a + t * (b - a));
            }
            return pts;
        }
        case PsKind::ConvexPolygon: {
            double min_x = kInfinity, min_y = kInfinity;
            double max_x = -kInfinity, max_y = -kInfinity;
            for (const auto& v : region.vertices) {
                min_x = std::min(min_x, v.x);
                max_x = std::max(max_x, v.x);
                min_y = std::min(min_y, v.y);
                max_y = std::max(max_y, v.y);
            }
            double extent = std::max(max_x - min_x, max_y - min_y);
            // Coarsest grid with at least n points in or on the polygon.
            for (std::size_t divisions = 1;; ++divisions) {
                double pitch = extent / static_cast<double>(divisions);
                std::vector<Point2> pts;
                for (std::size_t i = 0;; ++i) {
                    double x = min_x + static_cast<double>(i) * pitch;
                    if (x > max_x + 1e-12) break;
                    for (std::size_t j = 0;; ++j) {
                        double y = min_y + static_cast<double>(j) * pitch;
                        if (y > max_y + 1e-12) break;
                        if (geom::contains(region.vertices, {x, y}, 1e-9))
                            pts.push_back({x, y});
                    }
                }
                if (pts.size() >= n) return pts;
            }
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<ObjectiveVector> sample_reference_front(const MpDmpProblem& problem,
                                                    const PsRegion& region,
                                                    std::size_t n) {
    if (n == 0) throw std::invalid_argument("sample_reference_front: n >= 1");
    std::vector<ObjectiveVector> front;
    for (const auto& p : sample_ps_points(region, n)) {
        front.push_back(evaluate(problem, {p.x, p.y}));
    }
    return front;
}

}  // namespace mpdmp
