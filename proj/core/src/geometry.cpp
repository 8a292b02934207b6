#include "kagome/geometry.hpp"

#include <cmath>
#include <numbers>

namespace kagome {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double angle_at(Point2 p, Point2 q, Point2 r) {
    const double ax = q.x - p.x, ay = q.y - p.y;
    const double bx = r.x - p.x, by = r.y - p.y;
    const double na = std::hypot(ax, ay), nb = std::hypot(bx, by);
    if (na == 0.0 || nb == 0.0)
        throw DegenerateConfiguration("quad_angles: coincident vertices");
    double c = (ax * bx + ay * by) / (na * nb);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

Cplx2 doubled(double angle) { return std::polar(1.0, 2.0 * angle); }

}  // namespace

Cplx2 geo_factor(const GeoQuad& g) {
    const Cplx2 u1 = g.u1, v1 = g.v1, u2 = g.u2, v2 = g.v2;
    const Cplx2 num = u1 * u2 * v1 * v2 - u1 * v1 * v2 - u2 * v1 * v2 + v1 + v2 - 1.0;
    const Cplx2 den = u1 * u2 * v1 * v2 - u1 * u2 * v1 - u1 * u2 * v2 + u1 + u2 - 1.0;
    if (std::abs(den) < 1e-12) {
        if (std::abs(num) < 1e-12)
            throw DegenerateConfiguration("geo_pentagon: 0/0 configuration");
        throw SingularValue("geo_pentagon: vanishing denominator");
    }
    return -num / den;
}

GeoQuad geo_pentagon(const GeoQuad& g) {
    const Cplx2 f = geo_factor(g);
    return {g.u1 * g.v2, f / g.v2, g.u1 * g.u2 * f, g.v1 * g.v2 / f};
}

GeoQuad geo_pentagon_inverse(const GeoQuad& g) {
    const Cplx2 k1 = g.u1;                    // = u1 v2
    const Cplx2 k2 = g.u2 / (g.u1 * g.v1);    // = u2
    const Cplx2 w = g.v1 * g.v2;              // = v1
    const Cplx2 v1p = g.v1;
    // F(u1' / t, k2, w, t) = v1' t is linear in t = v2.
    const Cplx2 a = v1p * k1 * k2 * w - v1p * k1 * k2 + v1p * k2 - v1p - k2 * w + 1.0;
    const Cplx2 b = -v1p * k1 * k2 * w + v1p * k1 + k1 * k2 * w - k1 * w + w - 1.0;
    if (std::abs(a) < 1e-12)
        throw DegenerateConfiguration("geo_pentagon_inverse: degenerate configuration");
    const Cplx2 v2 = -b / a;
    if (std::abs(v2) < 1e-12)
        throw SingularValue("geo_pentagon_inverse: vanishing v2");
    return {k1 / v2, w, k2, v2};
}

QuadAngles quad_angles(Point2 a, Point2 b, Point2 c, Point2 d, double min_area) {
    const Point2 pts[4] = {a, b, c, d};
    double orient = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double cr = cross(pts[k], pts[(k + 1) % 4], pts[(k + 2) % 4]);
        if (k == 0) orient = cr;
        if (std::abs(cr) < 2.0 * min_area || cr * orient <= 0.0)
            throw DegenerateConfiguration("quad_angles: quadrilateral not convex");
    }
    // dissection triangle areas: BCD, ABD / ABC, ACD
    const double areas[4] = {std::abs(cross(b, c, d)) / 2.0, std::abs(cross(a, b, d)) / 2.0,
                             std::abs(cross(a, b, c)) / 2.0, std::abs(cross(a, c, d)) / 2.0};
    for (double s : areas)
        if (s < min_area) throw DegenerateConfiguration("quad_angles: flat triangle");

    QuadAngles out;
    out.unprimed = {doubled(angle_at(b, c, d)), doubled(angle_at(c, b, d)),
                    doubled(angle_at(a, b, d)), doubled(angle_at(b, a, d))};
    out.primed = {doubled(angle_at(b, a, c)), doubled(angle_at(c, a, b)),
                  doubled(angle_at(a, c, d)), doubled(angle_at(c, a, d))};
    return out;
}

GeoQuad random_geo_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto triangle = [&](Cplx2& u, Cplx2& v) {
        for (;;) {
            const double beta = 0.1 + unit(rng) * (kPi - 0.3);
            const double gamma = 0.1 + unit(rng) * (kPi - 0.3);
            if (beta + gamma < kPi - 0.05) {
                u = doubled(beta);
                v = doubled(gamma);
                return;
            }
        }
    };
    GeoQuad g;
    triangle(g.u1, g.v1);
    triangle(g.u2, g.v2);
    return g;
}

std::array<Point2, 4> random_convex_quad(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (;;) {
        std::array<Point2, 4> p;
        for (auto& q : p) q = {coord(rng), coord(rng)};
        Point2 centroid{0, 0};
        for (const auto& q : p) {
            centroid.x += q.x / 4;
            centroid.y += q.y / 4;
        }
        std::sort(p.begin(), p.end(), [&](Point2 s, Point2 t) {
            return std::atan2(s.y - centroid.y, s.x - centroid.x) <
                   std::atan2(t.y - centroid.y, t.x - centroid.x);
        });
        bool ok = true;
        double orient = 0.0;
        for (int k = 0; k < 4 && ok; ++k) {
            const double cr = cross(p[k], p[(k + 1) % 4], p[(k + 2) % 4]);
            if (k == 0) orient = cr;
            ok = std::abs(cr) > 0.1 && cr * orient > 0.0;
        }
        if (ok) return p;
    }
}

}  // namespace kagome
