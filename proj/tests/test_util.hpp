#ifndef JHOM_TEST_UTIL_HPP
#define JHOM_TEST_UTIL_HPP

#include <random>

#include "jhom/jmat.hpp"

namespace jhom::testutil {

inline QVec random_elem(const InvolutiveAlgebra& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    QVec v = zero_vec(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) v[i] = coeff(rng);
    return v;
}

inline JMat random_fin_jmat(const InvolutiveAlgebra& alg, std::mt19937_64& rng, int entries = 3, long span = 4) {
    std::uniform_int_distribution<long> idx(-span, span);
    JMat m(alg);
    for (int e = 0; e < entries; ++e) m.add_entry(idx(rng), idx(rng), random_elem(alg, rng));
    return m;
}

inline JMat random_jmat(const InvolutiveAlgebra& alg, std::mt19937_64& rng, int entries = 3, long span = 4) {
    JMat m = random_fin_jmat(alg, rng, entries, span);
    std::uniform_int_distribution<long> off(-2, 2);
    std::uniform_int_distribution<int> nshift(0, 2);
    int k = nshift(rng);
    for (int e = 0; e < k; ++e) m.add_shift(off(rng), random_elem(alg, rng));
    return m;
}

} // namespace jhom::testutil

#endif
