#pragma once

#include <algorithm>
#include <vector>

#include "kagome/laurent.hpp"

namespace kagome {

template <class T>
using SquareMatrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
void check_square(const SquareMatrix<T>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw InputError("determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw InputError("determinant: matrix not square");
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

inline bool entry_is_zero(const CMat& v) { return ring::is_zero(v); }
inline double entry_residual(const CMat& a, const CMat& b) { return ring::residual(a, b); }
inline CMat zero_like(const CMat& v) { return CMat::Zero(v.rows(), v.cols()); }

template <class R>
bool entry_is_zero(const Lp2<R>& v) {
    return v.is_zero();
}
template <class R>
double entry_residual(const Lp2<R>& a, const Lp2<R>& b) {
    return poly_residual(a, b, R{});
}
template <class R>
Lp2<R> zero_like(const Lp2<R>&) {
    return {};
}

}  // namespace detail

/// Exact determinant of a matrix of Laurent polynomials over a commutative
/// coefficient ring, by fraction-free (Bareiss) elimination. Every division
/// is exact in the polynomial ring; a failed division throws, it is never
/// approximated. Pivots are chosen as the sparsest nonzero entry in the
/// column to limit intermediate growth.
template <class R>
Lp2<R> det_poly(SquareMatrix<Lp2<R>> m) {
    detail::check_square(m);
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];

    Lp2<R> prev = Lp2<R>::constant(R(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        std::size_t best_terms = 0;
        for (std::size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            if (pivot == n || m[i][k].size() < best_terms) {
                pivot = i;
                best_terms = m[i][k].size();
            }
        }
        if (pivot == n) return {};  // zero column: singular
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Lp2<R> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? Lp2<R>{} : num.div_exact(prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    Lp2<R> det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Division-free cofactor expansion, dimensions up to 4. Serves as the
/// independent oracle for det_poly.
template <class R>
Lp2<R> det_poly_cofactor(const SquareMatrix<Lp2<R>>& m) {
    detail::check_square(m);
    const std::size_t n = m.size();
    if (n > 4) throw InputError("det_poly_cofactor: dimension > 4");
    struct Rec {
        const SquareMatrix<Lp2<R>>& m;
        Lp2<R> run(std::size_t row, std::vector<std::size_t> cs) {
            if (cs.size() == 1) return m[row][cs[0]];
            Lp2<R> acc;
            for (std::size_t k = 0; k < cs.size(); ++k) {
                if (m[row][cs[k]].is_zero()) continue;
                std::vector<std::size_t> sub;
                sub.reserve(cs.size() - 1);
                for (std::size_t t = 0; t < cs.size(); ++t)
                    if (t != k) sub.push_back(cs[t]);
                Lp2<R> term = m[row][cs[k]] * run(row + 1, std::move(sub));
                if (k % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            return acc;
        }
    } rec{m};
    std::vector<std::size_t> cols(n);
    for (std::size_t c = 0; c < n; ++c) cols[c] = c;
    return rec.run(0, std::move(cols));
}

/// Row-ordered determinant for entries that need not commute across columns:
/// sum over permutations of sign * m[0][s(0)] * m[1][s(1)] * ..., factors
/// multiplied in increasing row order. Well defined when entries from
/// distinct rows commute pairwise (here: each row holds operators of a
/// single lattice site). Dimensions above 6 are rejected (factorial cost).
/// Cross-row commutativity is sampled to `comm_tol` unless `trust_rows`.
template <class V>
V det_row_ordered(const SquareMatrix<V>& m, bool trust_rows = false,
                  double comm_tol = 1e-8) {
    detail::check_square(m);
    const std::size_t n = m.size();
    if (n > 6) throw InputError("det_row_ordered: dimension > 6");

    if (!trust_rows) {
        for (std::size_t r = 0; r + 1 < n; ++r) {
            for (std::size_t s = r + 1; s < n; ++s) {
                for (std::size_t c = 0; c < n; ++c) {
                    const V& a = m[r][c];
                    const V& b = m[s][(c + 1) % n];
                    if (detail::entry_is_zero(a) || detail::entry_is_zero(b)) continue;
                    V ab = a * b;
                    V ba = b * a;
                    if (detail::entry_residual(ab, ba) > comm_tol)
                        throw InputError("det_row_ordered: cross-row entries do not commute");
                }
            }
        }
    }

    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    V det{};
    bool have = false;
    do {
        bool zero = false;
        for (std::size_t r = 0; r < n; ++r)
            if (detail::entry_is_zero(m[r][perm[r]])) {
                zero = true;
                break;
            }
        if (zero) continue;
        V term = m[0][perm[0]];
        for (std::size_t r = 1; r < n; ++r) term = term * m[r][perm[r]];
        if (detail::permutation_sign(perm) < 0) term = -term;
        if (!have) {
            det = std::move(term);
            have = true;
        } else {
            det = det + term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!have) return detail::zero_like(m[0][0]);
    return det;
}

}  // namespace kagome
