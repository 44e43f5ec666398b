#ifndef TSPSURF_GEOMETRY_HPP
#define TSPSURF_GEOMETRY_HPP

#include "tspsurf/instance.hpp"

namespace tspsurf {

/**
 * Sign predicates for planar triangulation code. Each returns -1, 0 or +1.
 * Evaluation is staged: a double determinant with a static error bound,
 * then long double, then exact 128-bit integer arithmetic when all inputs
 * are integral and small enough. A result of 0 means the value is either
 * exactly zero or below the last stage's error bound; callers must treat 0
 * deterministically.
 */

/// +1 if a,b,c make a left turn (counterclockwise), -1 right turn, 0 collinear.
int orient2d(const Point& a, const Point& b, const Point& c);

/// +1 if p lies strictly inside the circumcircle of CCW triangle (a,b,c),
/// -1 strictly outside, 0 on the circle. The triangle must be CCW.
int incircle(const Point& a, const Point& b, const Point& c, const Point& p);

/// True if closed segments (p,q) and (r,s) intersect in a way that is not a
/// single shared endpoint: proper crossings, endpoint-in-interior contacts,
/// and collinear overlaps of positive length all conflict.
bool segments_conflict(const Point& p, const Point& q, const Point& r,
                       const Point& s);

} // namespace tspsurf

#endif
