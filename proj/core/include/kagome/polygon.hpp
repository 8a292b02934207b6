#pragma once

#include <vector>

#include "kagome/laurent.hpp"

namespace kagome {

/// The exponent region of the spectral polynomials for lattice size N:
/// all integer (a, b) with -N <= a, -N <= b and -N <= a+b <= 0.
/// Cardinality (3N+2)(N+1)/2; the marked normalization point is (-N, 0).
class NewtonPolygon {
public:
    explicit NewtonPolygon(int n);

    int n() const { return n_; }
    const std::vector<Exp2>& points() const { return points_; }
    bool contains(int a, int b) const;

    std::size_t interior_count() const;        // (3N-2)(N-1)/2
    std::vector<Exp2> left_edge() const;       // a = -N, 0 <= b <= N
    std::vector<Exp2> bottom_edge() const;     // b = -N, 0 <= a <= N
    std::vector<Exp2> diagonal_edge() const;   // a + b = -N
    std::vector<Exp2> hypotenuse() const;      // a + b = 0

private:
    int n_;
    std::vector<Exp2> points_;
};

inline NewtonPolygon polygon_points(int n) { return NewtonPolygon(n); }

}  // namespace kagome
