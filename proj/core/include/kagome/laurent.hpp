#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "kagome/ring.hpp"

namespace kagome {

/// Exponent pair (a, b) of a Laurent monomial x^a y^b; negative entries allowed.
using Exp2 = std::pair<int, int>;

/// Sparse bivariate Laurent polynomial over a coefficient ring R.
/// Zero coefficients are never stored. Coefficient multiplication preserves
/// the (left, right) factor order, so the type is usable over matrix rings.
template <class R>
class Lp2 {
public:
    using TermMap = std::map<Exp2, R>;

    Lp2() = default;
    static Lp2 monomial(int a, int b, R coeff) {
        Lp2 p;
        if (!ring::is_zero(coeff)) p.terms_.emplace(Exp2{a, b}, std::move(coeff));
        return p;
    }
    static Lp2 constant(R coeff) { return monomial(0, 0, std::move(coeff)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient at (a, b); `fallback` when absent.
    const R& coeff(int a, int b, const R& fallback) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? fallback : it->second;
    }
    bool has_term(int a, int b) const { return terms_.count({a, b}) != 0; }

    std::vector<Exp2> support() const {
        std::vector<Exp2> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    void add_term(int a, int b, const R& coeff) {
        if (ring::is_zero(coeff)) return;
        auto [it, inserted] = terms_.emplace(Exp2{a, b}, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (ring::is_zero(it->second)) terms_.erase(it);
        }
    }

    Lp2 operator-() const {
        Lp2 out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    Lp2& operator+=(const Lp2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    Lp2& operator-=(const Lp2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }

    friend Lp2 operator+(Lp2 a, const Lp2& b) { return a += b; }
    friend Lp2 operator-(Lp2 a, const Lp2& b) { return a -= b; }

    friend Lp2 operator*(const Lp2& a, const Lp2& b) {
        Lp2 out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return out;
    }

    friend bool operator==(const Lp2& a, const Lp2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Lp2& a, const Lp2& b) { return !(a == b); }

    /// Exact division (requires the quotient to exist in R[x^!,y^!]).
    /// Works over coefficient fields and over rings whose leading
    /// coefficients are units (DualRat with nonzero value part).
    /// Throws SingularValue if the division is not exact.
    Lp2 div_exact(const Lp2& divisor) const {
        if (divisor.is_zero()) throw SingularValue("Lp2: division by zero polynomial");
        if (is_zero()) return {};
        Lp2 quotient;
        Lp2 rem = *this;
        const auto lead = *divisor.terms_.rbegin();  // lex-largest exponent
        const R lead_inv = ring::inv(lead.second);
        // Each round cancels the lex-leading term of the remainder, so the
        // loop runs once per quotient term when the division is exact.
        std::size_t guard = 1u << 20;
        while (!rem.is_zero()) {
            if (guard-- == 0) throw SingularValue("Lp2: inexact polynomial division");
            const auto top = *rem.terms_.rbegin();
            const Exp2 e{top.first.first - lead.first.first,
                         top.first.second - lead.first.second};
            const R c = top.second * lead_inv;
            quotient.add_term(e.first, e.second, c);
            Lp2 t = monomial(e.first, e.second, c);
            rem -= t * divisor;
        }
        return quotient;
    }

    /// Drops terms whose coefficient magnitude is at most eps; only
    /// meaningful over floating coefficient rings.
    void prune(double eps) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (ring::magnitude(it->second) <= eps)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Lp2& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (e.first != 0) os << "*L^" << e.first;
            if (e.second != 0) os << "*M^" << e.second;
        }
        return os;
    }

private:
    TermMap terms_;
};

/// Max coefficient-wise residual between two polynomials (union of supports).
template <class R>
double poly_residual(const Lp2<R>& a, const Lp2<R>& b, const R& zero) {
    double worst = 0.0;
    for (const auto& [e, c] : a.terms())
        worst = std::max(worst, ring::residual(c, b.coeff(e.first, e.second, zero)));
    for (const auto& [e, c] : b.terms())
        if (!a.has_term(e.first, e.second))
            worst = std::max(worst, ring::residual(c, zero));
    return worst;
}

}  // namespace kagome
