#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include "kagome/dual.hpp"
#include "kagome/matrix.hpp"
#include "kagome/rational.hpp"

namespace kagome::ring {

// One set of map formulas serves the classical (Rat), derivative (DualRat),
// phase (complex) and quantum (CMat) layers. These shims provide the few
// operations the formulas need beyond +,-,*: inversion, a regularity
// predicate, exact/approximate comparison, and zero detection.

template <class R>
inline constexpr bool is_exact_v = std::is_same_v<R, Rat> || std::is_same_v<R, DualRat>;

inline Rat inv(const Rat& x) {
    if (x.is_zero()) throw SingularValue("inv: zero rational");
    return Rat(1) / x;
}
inline DualRat inv(const DualRat& x) { return DualRat(Rat(1)) / x; }
inline Cplx inv(const Cplx& x) {
    if (std::abs(x) < 1e-300) throw SingularValue("inv: zero complex value");
    return 1.0 / x;
}
inline CMat inv(const CMat& x) { return inverse(x); }

inline bool regular(const Rat& x) { return !x.is_zero(); }
inline bool regular(const DualRat& x) { return !x.val.is_zero(); }
inline bool regular(const Cplx& x) { return std::abs(x) > 1e-12; }
inline bool regular(const CMat& x) { return invertible(x); }

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const DualRat& x) { return x.is_zero(); }
inline bool is_zero(const Cplx& x) { return x == Cplx(0.0); }
inline bool is_zero(const CMat& x) { return x.size() == 0 || inf_norm(x) == 0.0; }

/// Distance used by verifiers: 0 for exact equality; max-abs otherwise.
inline double residual(const Rat& a, const Rat& b) { return a == b ? 0.0 : 1.0; }
inline double residual(const DualRat& a, const DualRat& b) { return a == b ? 0.0 : 1.0; }
inline double residual(const Cplx& a, const Cplx& b) { return std::abs(a - b); }
inline double residual(const CMat& a, const CMat& b) { return inf_norm(a - b); }

/// Magnitude of a single element (scale estimate for floating rings).
inline double magnitude(const Rat& x) { return std::abs(x.to_double()); }
inline double magnitude(const Cplx& x) { return std::abs(x); }
inline double magnitude(const CMat& x) { return inf_norm(x); }

}  // namespace kagome::ring
