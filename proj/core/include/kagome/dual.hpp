#pragma once

#include "kagome/rational.hpp"

namespace kagome {

/// Rational dual number a + b*eps with eps^2 = 0. Running a rational map
/// over DualRat yields exact first derivatives (used for symplectic-form
/// checks and Jacobian ranks). Division requires a nonzero value part.
struct DualRat {
    Rat val;
    Rat der;

    DualRat() = default;
    DualRat(Rat v) : val(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    DualRat(Rat v, Rat d) : val(std::move(v)), der(std::move(d)) {}

    bool is_zero() const { return val.is_zero() && der.is_zero(); }

    DualRat operator-() const { return {-val, -der}; }
    DualRat& operator+=(const DualRat& o) { val += o.val; der += o.der; return *this; }
    DualRat& operator-=(const DualRat& o) { val -= o.val; der -= o.der; return *this; }
    DualRat& operator*=(const DualRat& o) {
        der = val * o.der + der * o.val;
        val *= o.val;
        return *this;
    }
    DualRat& operator/=(const DualRat& o) {
        if (o.val.is_zero()) throw SingularValue("DualRat: division by eps-only value");
        der = (der * o.val - val * o.der) / (o.val * o.val);
        val /= o.val;
        return *this;
    }

    friend DualRat operator+(DualRat a, const DualRat& b) { return a += b; }
    friend DualRat operator-(DualRat a, const DualRat& b) { return a -= b; }
    friend DualRat operator*(DualRat a, const DualRat& b) { return a *= b; }
    friend DualRat operator/(DualRat a, const DualRat& b) { return a /= b; }
    friend bool operator==(const DualRat& a, const DualRat& b) {
        return a.val == b.val && a.der == b.der;
    }
    friend bool operator!=(const DualRat& a, const DualRat& b) { return !(a == b); }
};

}  // namespace kagome
