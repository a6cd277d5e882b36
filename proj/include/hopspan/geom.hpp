#pragma once

#include "hopspan/types.hpp"

namespace hopspan {

enum class Orientation { clockwise = -1, collinear = 0, counterclockwise = 1 };
enum class CirclePosition { outside = -1, on = 0, inside = 1 };

struct Segment {
    Point2 a;
    Point2 b;

    Segment(Point2 a_, Point2 b_);
};

/// Closed disk.
struct Disk {
    Point2 center;
    double radius = 0.0;

    Disk() = default;
    Disk(Point2 c, double r);
};

bool is_finite(const Point2& p);
double squared_distance(const Point2& a, const Point2& b);
double distance(const Point2& a, const Point2& b);

// Exact predicates. Results are exact for the given double coordinates.

/// Sign of the signed area of abc: +1 counterclockwise, -1 clockwise.
int orient_sign(const Point2& a, const Point2& b, const Point2& c);
Orientation orientation(const Point2& a, const Point2& b, const Point2& c);

/// Sign of the lifted incircle determinant: +1 when d is inside the circle
/// through a, b, c given counterclockwise a, b, c (the sign flips for cw).
int incircle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Position of d relative to the circumcircle of a, b, c. The triangle may be
/// given in either orientation; throws DegenerateError if it is collinear.
CirclePosition in_circumcircle(const Point2& a, const Point2& b, const Point2& c,
                               const Point2& d);

/// sign(|ab|^2 - |cd|^2)
int compare_squared_distance(const Point2& a, const Point2& b, const Point2& c,
                             const Point2& d);
/// sign(|ab|^2 - r2)
int compare_squared_distance(const Point2& a, const Point2& b, double r2);

/// p lies on segment ab, strictly between a and b.
bool on_segment_interior(const Point2& p, const Point2& a, const Point2& b);

/// True iff the segments share a point interior to both, or an endpoint of
/// one lies in the interior of the other. Sharing only endpoints is not a
/// crossing.
bool segments_properly_cross(const Point2& a, const Point2& b, const Point2& c,
                             const Point2& d);
bool segments_properly_cross(const Segment& s1, const Segment& s2);

Disk diametral_disk(const Point2& p, const Point2& q);

/// x in D(p, q), decided exactly as (x - p).(x - q) <= 0.
bool in_diametral_disk(const Point2& p, const Point2& q, const Point2& x);

/// |x - center|^2 <= radius^2, exact.
bool disk_contains(const Disk& d, const Point2& x);

/// Upper bound on the distance from any point of a convex shape of diameter
/// d to the nearer endpoint of a segment of length pq_len that meets it.
double convex_reach_bound(double d, double pq_len);

}  // namespace hopspan
