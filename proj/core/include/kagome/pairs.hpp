#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "kagome/ring.hpp"

namespace kagome {

/// A dynamical site variable: the (u, v) generator pair. Over CMat the pair
/// satisfies u v = omega v u; over commutative rings it is just two values.
template <class R>
struct WPair {
    R u;
    R v;
};

template <class R>
using PairState = std::vector<WPair<R>>;

/// Deterministic per-trial seeding: results do not depend on evaluation
/// order across trials.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Generic nonzero rational: numerator in [-9,9]\{0}, denominator in [1,9].
inline Rat random_small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 8);
    std::uniform_int_distribution<int> den(1, 9);
    int n = num(rng);
    if (n >= 0) ++n;  // skip zero
    return Rat(n, den(rng));
}

inline WPair<Rat> random_rat_pair(std::mt19937_64& rng) {
    return {random_small_rat(rng), random_small_rat(rng)};
}

inline PairState<Rat> random_rat_state(int pairs, std::mt19937_64& rng) {
    PairState<Rat> st;
    st.reserve(pairs);
    for (int k = 0; k < pairs; ++k) st.push_back(random_rat_pair(rng));
    return st;
}

inline Cplx random_phase(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
    return std::polar(1.0, angle(rng));
}

/// One Weyl pair per slot of a `pairs`-fold tensor product, random unit
/// phases as parameters. Returns the common omega through `omega_out`.
PairState<CMat> random_weyl_state(int pairs, int rep_dim, std::mt19937_64& rng,
                                  Cplx* omega_out = nullptr);

}  // namespace kagome
