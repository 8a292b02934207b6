#include "kagome/matrix.hpp"

#include <cmath>
#include <numbers>

namespace kagome {

namespace {

double pivot_ratio(const Eigen::PartialPivLU<CMat>& lu, double* min_pivot) {
    const auto diag = lu.matrixLU().diagonal();
    double lo = std::abs(diag(0));
    double hi = lo;
    for (Eigen::Index k = 1; k < diag.size(); ++k) {
        const double p = std::abs(diag(k));
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    if (min_pivot) *min_pivot = lo;
    return lo == 0.0 ? std::numeric_limits<double>::infinity() : hi / lo;
}

}  // namespace

CMat inverse(const CMat& m) {
    if (m.rows() != m.cols()) throw InputError("inverse: matrix not square");
    Eigen::PartialPivLU<CMat> lu(m);
    double lo = 0.0;
    const double ratio = pivot_ratio(lu, &lo);
    if (lo == 0.0 || ratio > kPivotRatioLimit)
        throw SingularValue("inverse: pivot ratio " + std::to_string(ratio));
    return lu.inverse();
}

bool invertible(const CMat& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    Eigen::PartialPivLU<CMat> lu(m);
    double lo = 0.0;
    const double ratio = pivot_ratio(lu, &lo);
    return lo != 0.0 && ratio <= kPivotRatioLimit;
}

double inf_norm(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

CMat mat_pow(const CMat& m, long k) {
    CMat base = k < 0 ? inverse(m) : m;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    CMat out = CMat::Identity(m.rows(), m.cols());
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

ClockShift clock_shift(int m) {
    if (m < 2) throw InputError("clock_shift: dimension must be >= 2");
    const Cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / m);
    CMat z = CMat::Zero(m, m);
    CMat x = CMat::Zero(m, m);
    Cplx w = 1.0;
    for (int k = 0; k < m; ++k) {
        z(k, k) = w;
        w *= omega;
        x(k, (k + 1) % m) = 1.0;
    }
    return {std::move(x), std::move(z), omega};
}

CyclicWeylPair weyl_pair(int m, Cplx x, Cplx y, int site, int sites) {
    if (x == Cplx(0.0) || y == Cplx(0.0))
        throw SingularValue("weyl_pair: zero parameter gives a non-invertible generator");
    if (site < 0 || site >= sites) throw InputError("weyl_pair: site index out of range");
    ClockShift cs = clock_shift(m);

    auto embed = [&](const CMat& op) {
        CMat out = CMat::Identity(1, 1);
        for (int k = 0; k < sites; ++k) {
            const CMat& factor = (k == site) ? op : CMat(CMat::Identity(m, m));
            CMat next(out.rows() * factor.rows(), out.cols() * factor.cols());
            for (Eigen::Index r = 0; r < out.rows(); ++r)
                for (Eigen::Index c = 0; c < out.cols(); ++c)
                    next.block(r * factor.rows(), c * factor.cols(), factor.rows(),
                               factor.cols()) = out(r, c) * factor;
            out = std::move(next);
        }
        return out;
    };

    CyclicWeylPair wp;
    wp.rep_dim = m;
    wp.omega = cs.omega;
    wp.u = x * embed(cs.x);
    wp.v = y * embed(cs.z);
    return wp;
}

}  // namespace kagome
