#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

#include "kagome/errors.hpp"

namespace kagome {

/// Dense complex matrix, the quantum side of every construction here.
using CMat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

/// Pivot-ratio threshold beyond which a matrix is treated as singular.
/// Map formulas invert sums like v1+u3; near-singular random draws must be
/// rejected and redrawn rather than silently amplified.
inline constexpr double kPivotRatioLimit = 1e12;

/// Inverse via partial-pivot LU. Throws SingularValue when the pivot ratio
/// exceeds kPivotRatioLimit (or a pivot vanishes).
CMat inverse(const CMat& m);

/// True when inverse(m) would succeed under the pivot-ratio policy.
bool invertible(const CMat& m);

/// Max-abs-entry norm.
double inf_norm(const CMat& m);

/// m^k for any integer k (negative powers go through inverse()).
CMat mat_pow(const CMat& m, long k);

struct ClockShift {
    CMat x;      ///< cyclic shift, x[k][(k+1) mod M] = 1
    CMat z;      ///< diag(1, omega, ..., omega^{M-1})
    Cplx omega;  ///< exp(2*pi*i/M); satisfies x*z = omega*z*x
};

/// The cyclic Z_M pair of clock and shift matrices. Throws InputError for M < 2.
ClockShift clock_shift(int m);

/// A Weyl pair u v = omega v u realized on a K-fold tensor product of
/// M-dimensional cyclic representations: u = x*X, v = y*Z acting on tensor
/// slot `site`, identity elsewhere. Pairs at distinct sites commute exactly.
struct CyclicWeylPair {
    int rep_dim;     ///< M
    Cplx omega;      ///< primitive M-th root of unity (= q^2)
    CMat u;
    CMat v;
};

CyclicWeylPair weyl_pair(int m, Cplx x, Cplx y, int site, int sites);

}  // namespace kagome
