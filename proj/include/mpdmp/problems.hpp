#ifndef MPDMP_PROBLEMS_HPP
#define MPDMP_PROBLEMS_HPP

#include <string>
#include <vector>

#include "mpdmp/core.hpp"
#include "mpdmp/geometry.hpp"

namespace mpdmp {

using geom::Point2;
using TargetPoint = Point2;

struct Bounds {
    double lo = -10.0;
    double hi = 10.0;

    double clamp(double v) const;
    bool inside(double v) const { return v >= lo && v <= hi; }
};

/// One benchmark instance: per-objective target point sets plus the party
/// layout mapping objectives to parties.
struct MpDmpProblem {
    int id = 0;
    std::string name;
    PartyLayout layout;
    std::vector<std::vector<TargetPoint>> objective_targets;  // one set per objective
    Bounds bounds;

    std::size_t num_objectives() const { return objective_targets.size(); }
};

enum class PsKind { Point, Segment, ConvexPolygon };

/// Analytic description of a true Pareto set in decision space.
struct PsRegion {
    PsKind kind = PsKind::Point;
    std::vector<Point2> vertices;

    geom::ConvexRegion as_region() const { return vertices; }
};

PsRegion region_from_vertices(geom::ConvexRegion vertices);

/// Distance objectives of Eqs. (8)-(9); out-of-bounds x is a contract error.
ObjectiveVector evaluate(const MpDmpProblem& problem, DecisionVector x);

/// The canonical MPDMP1..MPDMP8 instances.
MpDmpProblem suite(int id);

/// The analytic common Pareto set of suite problem `id`.
PsRegion true_ps(int id);

/// Independent geometric construction of the common Pareto set: per-party
/// convex hull of target points, intersected across parties. Used by tests
/// and the `verify` command, never by the optimizers.
PsRegion ps_oracle(const MpDmpProblem& problem);

/// Deterministic decision-space sample of `region` mapped through evaluate().
/// Point: the point once. Segment: n equally spaced points with endpoints.
/// Polygon: an axis-aligned grid clipped to the polygon, refined until at
/// least n points land inside or on the boundary.
std::vector<ObjectiveVector> sample_reference_front(const MpDmpProblem& problem,
                                                    const PsRegion& region,
                                                    std::size_t n);

/// Decision-space sample points backing sample_reference_front.
std::vector<Point2> sample_ps_points(const PsRegion& region, std::size_t n);

}  // namespace mpdmp

#endif
