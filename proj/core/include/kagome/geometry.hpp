#pragma once

#include <array>
#include <complex>
#include <random>

#include "kagome/errors.hpp"

namespace kagome {

using Cplx2 = std::complex<double>;

/// Planar point.
struct Point2 {
    double x;
    double y;
};

/// Angle data of a quadrilateral dissection: unit-modulus doubled-angle
/// phases u_j = e^{2i beta_j}, v_j = e^{2i gamma_j} for the two triangles.
struct GeoQuad {
    Cplx2 u1, v1, u2, v2;
};

/// The cross-ratio-like factor of the re-dissection map. Throws
/// DegenerateConfiguration on the 0/0 point (all phases collapsing) and
/// SingularValue when only the denominator vanishes.
Cplx2 geo_factor(const GeoQuad& g);

/// Euclidean re-dissection map on doubled-angle phases:
///   u1' = u1 v2,  v1' = F / v2,  u2' = u1 u2 F,  v2' = v1 v2 / F.
GeoQuad geo_pentagon(const GeoQuad& g);

/// Closed-form inverse of geo_pentagon. Derived by eliminating the shared
/// variables: v1 = v1' v2', u2 = u2' / (u1' v1'), and v2 solves a linear
/// equation obtained from F = v1' v2. Validated by round-trip tests.
GeoQuad geo_pentagon_inverse(const GeoQuad& g);

/// Measures both dissections of convex quadrilateral ABCD (A,B,C,D in cyclic
/// order; diagonal BD first, diagonal AC second) and returns the doubled
/// phases. Triangle labeling: first dissection puts (beta1,gamma1) at (B,C)
/// of triangle BCD and (beta2,gamma2) at (A,B) of triangle ABD; second puts
/// (beta1',gamma1') at (B,C) of triangle ABC and (beta2',gamma2') at (A,C)
/// of triangle ACD. Throws DegenerateConfiguration for non-convex or flat
/// input (any triangle area below `min_area`).
struct QuadAngles {
    GeoQuad unprimed;
    GeoQuad primed;
};
QuadAngles quad_angles(Point2 a, Point2 b, Point2 c, Point2 d, double min_area = 1e-9);

/// Random triangle datum (beta, gamma > 0, beta + gamma < pi) as phases.
GeoQuad random_geo_point(std::mt19937_64& rng);

/// Random convex quadrilateral in cyclic order, bounded away from flat.
std::array<Point2, 4> random_convex_quad(std::mt19937_64& rng);

}  // namespace kagome
