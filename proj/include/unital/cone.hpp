#pragma once

#include <vector>

#include "unital/report.hpp"

namespace unital {

/// Vertex of the projection, (0, 0, 1, -a).
ProjPoint3 cone_center(const Field& f, Elem a);

/// (1, t, b t^{q+1} + r) -> (1, t, t^2, b t^{q+1} + r) and Y∞ -> (0, 0, 0, 1).
/// The image lies on x0 x2 = x1^2. Throws ParameterError for points not on
/// the classical unital of parameter b.
ProjPoint3 lift(const Field& f, Elem b, const ProjPoint2& p);

/// Projection from (0, 0, 1, -a) onto the plane x2 = 0, read in the plane
/// coordinates (x0, x1, x3). (1, t, t^2, w) -> (1, t, w + a t^2).
ProjPoint2 project(const Field& f, Elem a, const ProjPoint3& x);

/// True iff the three points are collinear in PG(3, q^2).
bool collinear(const Field& f, const ProjPoint3& x, const ProjPoint3& y, const ProjPoint3& z);

struct ConeOptions {
  unsigned jobs = 1;
  bool include_image = false;
};

/// Lifts the classical unital of parameter b, projects it from the center
/// and checks: the center is off the lift, no line joining two lifted
/// points passes through the center, the image has q^3+1 points, and it
/// equals the Buekenhout-Metz set for (a, b).
VerificationReport cone_pipeline(const Field& f, Elem a, Elem b, const ConeOptions& opt = {});

}  // namespace unital
