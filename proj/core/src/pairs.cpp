#include "kagome/pairs.hpp"

namespace kagome {

PairState<CMat> random_weyl_state(int pairs, int rep_dim, std::mt19937_64& rng,
                                  Cplx* omega_out) {
    PairState<CMat> st;
    st.reserve(pairs);
    for (int k = 0; k < pairs; ++k) {
        CyclicWeylPair wp = weyl_pair(rep_dim, random_phase(rng), random_phase(rng), k, pairs);
        if (omega_out) *omega_out = wp.omega;
        st.push_back({std::move(wp.u), std::move(wp.v)});
    }
    return st;
}

}  // namespace kagome
