#pragma once

#include <array>

#include "kagome/pairs.hpp"

namespace kagome {

// Rational automorphisms of tuples of Weyl pairs. Factor order in every
// product is part of the definition: over matrix rings the formulas are
// applied exactly as written, and the noncommutative order is what makes
// the maps canonical (Weyl-relation preserving).

/// Pentagon map on two pairs:
///   u1' = v2^-1 u1            v1' = v2^-1 (v1 + u2)
///   u2' = u2 (v1+u2)^-1 u1    v2' = v1 (v1+u2)^-1 v2
template <class R>
std::array<WPair<R>, 2> pentagon_forward(const WPair<R>& w1, const WPair<R>& w2) {
    R d = w1.v + w2.u;
    R d_inv = ring::inv(d);
    R v2_inv = ring::inv(w2.v);
    WPair<R> a{v2_inv * w1.u, v2_inv * d};
    WPair<R> b{w2.u * d_inv * w1.u, w1.v * d_inv * w2.v};
    return {std::move(a), std::move(b)};
}

/// Closed-form inverse of pentagon_forward, valid over noncommutative rings:
///   u1 = v2' u1' + u2'        v1 = v2' v1'
///   u2 = u2' u1'^-1 v1'       v2 = v2' + u2' u1'^-1
template <class R>
std::array<WPair<R>, 2> pentagon_inverse(const WPair<R>& w1, const WPair<R>& w2) {
    R u1_inv = ring::inv(w1.u);
    WPair<R> a{w2.v * w1.u + w2.u, w2.v * w1.v};
    WPair<R> b{w2.u * u1_inv * w1.v, w2.v + w2.u * u1_inv};
    return {std::move(a), std::move(b)};
}

enum class TetraVariant { A, B };

/// Tetrahedral map on three pairs. The two variants differ only in factor
/// order; they coincide on commutative rings and on ultra-local inputs
/// (pairs at distinct tensor slots). Variant B is the ordering that solves
/// the tetrahedron equation over the free algebra.
///
/// Variant A:
///   u1' = u2 + u1 v2 v3^-1        v1' = v3^-1 (v1+u3) v2
///   u2' = u3 (v1+u3)^-1 u1        v2' = v1 (v1+u3)^-1 v3
///   u3' = u1^-1 (v1+u3) u2        v3' = v2 + u1^-1 u2 v3
/// Variant B:
///   u1' = u2 + v2 v3^-1 u1        v1' = v2 v3^-1 (v1+u3)
///   u2' = u3 (v1+u3)^-1 u1        v2' = v1 (v1+u3)^-1 v3
///   u3' = u2 u1^-1 (v1+u3)        v3' = v2 + u2 u1^-1 v3
template <class R>
std::array<WPair<R>, 3> tetra_map(const WPair<R>& w1, const WPair<R>& w2,
                                  const WPair<R>& w3, TetraVariant variant) {
    R d = w1.v + w3.u;
    R d_inv = ring::inv(d);
    R v3_inv = ring::inv(w3.v);
    R u1_inv = ring::inv(w1.u);
    WPair<R> b{w3.u * d_inv * w1.u, w1.v * d_inv * w3.v};
    if (variant == TetraVariant::A) {
        WPair<R> a{w2.u + w1.u * w2.v * v3_inv, v3_inv * d * w2.v};
        WPair<R> c{u1_inv * d * w2.u, w2.v + u1_inv * w2.u * w3.v};
        return {std::move(a), std::move(b), std::move(c)};
    }
    WPair<R> a{w2.u + w2.v * v3_inv * w1.u, w2.v * v3_inv * d};
    WPair<R> c{w2.u * u1_inv * d, w2.v + w2.u * u1_inv * w3.v};
    return {std::move(a), std::move(b), std::move(c)};
}

template <class R>
std::array<WPair<R>, 3> tetra_map(const std::array<WPair<R>, 3>& w, TetraVariant variant) {
    return tetra_map(w[0], w[1], w[2], variant);
}

}  // namespace kagome
