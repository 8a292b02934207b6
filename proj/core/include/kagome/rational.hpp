#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "kagome/errors.hpp"

namespace kagome {

/// Arbitrary-precision rational. Always stored reduced with positive
/// denominator (mpq canonical form); all arithmetic is exact.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den) : q_(num, den) {
        if (den == 0) throw InputError("Rat: zero denominator");
        q_.canonicalize();
    }

    /// Parses "p" or "p/q" (optional sign, arbitrary precision).
    static Rat parse(std::string_view text);

    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    std::string str() const;      // "p" or "p/q"
    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }
    double to_double() const { return q_.get_d(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw SingularValue("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rat pow(Rat base, long e) {
    if (e < 0) {
        base = Rat(1) / base;
        e = -e;
    }
    Rat out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

}  // namespace kagome
