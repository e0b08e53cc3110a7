#ifndef JHOM_SHIFTMAP_HPP
#define JHOM_SHIFTMAP_HPP

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "jhom/dihedral.hpp"
#include "jhom/jmat.hpp"

namespace jhom {

// One k-basis symbol of the banded matrix algebra: either a single matrix
// unit with a coefficient basis element or a single shift with one.
struct JAtom {
    bool shift = false;
    long i = 0; // row index, or the shift offset
    long j = 0; // column index, unused for shifts
    int beta = 0;

    auto key() const { return std::make_tuple(shift, i, j, beta); }
    bool operator<(const JAtom& o) const { return key() < o.key(); }
    bool operator==(const JAtom& o) const { return key() == o.key(); }
};

JMat atom_to_jmat(const InvolutiveAlgebra& alg, const JAtom& a);

// Tensor chain with banded-matrix factors, kept in the canonical multilinear
// expansion over atoms so that scalar bookkeeping between factors merges.
struct JTensorChain {
    int n = 0;
    std::map<std::vector<JAtom>, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const JTensorChain& o) const { return n == o.n && terms == o.terms; }
};

// adds coeff * (factors[0] x ... x factors[n]) expanded multilinearly
void jchain_add_tensor(JTensorChain& c, const std::vector<JMat>& factors, const Rat& coeff);
JTensorChain jchain_scaled(const JTensorChain& c, const Rat& s);

// r_0 x ... x r_p  ->  r_0 I x sum_l (-1)^l (r_1 I x .. x r_l I x N x r_{l+1} I x .. x r_p I)
// Every output factor is an offset-0 shift or the right shift N.
JTensorChain phi_tilde(const InvolutiveAlgebra& alg, const TensorChain& c);

// y.(m_0 x ... x m_q) = (-1)^{q(q+1)/2} m_0^* x m_q^* x ... x m_1^*
JTensorChain y_J(const InvolutiveAlgebra& alg, const JTensorChain& c);

// Hochschild boundary with banded-matrix multiplication; exploratory only.
JTensorChain jhochschild_b(const InvolutiveAlgebra& alg, const JTensorChain& c);

// Chain identity: the reflection commutes with the shift insertion up to the
// expected_sign factor (-1 in the real identity; +1 is the negative control).
bool reflection_intertwine_check(const InvolutiveAlgebra& alg, int p, int samples, std::uint64_t seed,
                   int expected_sign = -1);

} // namespace jhom

#endif
