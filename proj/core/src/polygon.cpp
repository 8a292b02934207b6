#include "kagome/polygon.hpp"

#include "kagome/errors.hpp"

namespace kagome {

NewtonPolygon::NewtonPolygon(int n) : n_(n) {
    if (n < 1) throw InputError("NewtonPolygon: lattice size must be >= 1");
    for (int a = -n; a <= n; ++a)
        for (int b = -n; b <= n; ++b)
            if (-n <= a + b && a + b <= 0) points_.push_back({a, b});
}

bool NewtonPolygon::contains(int a, int b) const {
    return a >= -n_ && b >= -n_ && a + b >= -n_ && a + b <= 0;
}

std::size_t NewtonPolygon::interior_count() const {
    std::size_t count = 0;
    for (const auto& [a, b] : points_)
        if (a > -n_ && b > -n_ && a + b > -n_ && a + b < 0) ++count;
    return count;
}

std::vector<Exp2> NewtonPolygon::left_edge() const {
    std::vector<Exp2> e;
    for (int b = 0; b <= n_; ++b) e.push_back({-n_, b});
    return e;
}

std::vector<Exp2> NewtonPolygon::bottom_edge() const {
    std::vector<Exp2> e;
    for (int a = 0; a <= n_; ++a) e.push_back({a, -n_});
    return e;
}

std::vector<Exp2> NewtonPolygon::diagonal_edge() const {
    std::vector<Exp2> e;
    for (int k = 0; k <= n_; ++k) e.push_back({-n_ + k, -k});
    return e;
}

std::vector<Exp2> NewtonPolygon::hypotenuse() const {
    std::vector<Exp2> e;
    for (int a = -n_; a <= 0; ++a) e.push_back({a, -a});
    return e;
}

}  // namespace kagome
