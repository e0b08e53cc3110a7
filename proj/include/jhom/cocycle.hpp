#ifndef JHOM_COCYCLE_HPP
#define JHOM_COCYCLE_HPP

#include <cstdint>

#include "jhom/jmat.hpp"

namespace jhom {

// Central 2-cocycle on the banded matrix algebra, valued in R^ab. Evaluated
// two ways on every call: via corner compressions
//   Tr((I+ Y I-)(I- X I+) - (I+ X I-)(I- Y I+))
// and via a windowed trace of the defect [PXP, PYP] - P[X,Y]P with
// P = compression to the non-negative corner. The two must agree;
// InternalMismatch otherwise.
QVec psi(const JMat& x, const JMat& y);

// Double-sum form over matrix entries, finite support only:
//   sum_{i<0, j>=0} a_ij b_ji - sum_{i>=0, j<0} a_ij b_ji, pushed to R^ab.
QVec japanese_cocycle(const JMat& x, const JMat& y);

// psi([X,Y],Z) + psi([Y,Z],X) + psi([Z,X],Y) == 0
bool cocycle_identity(const JMat& x, const JMat& y, const JMat& z);

// Element of the one-dimensional central extension of a fixed-point
// subalgebra: a matrix part plus a central coordinate in (R^ab)_1.
struct ExtendedElement {
    JMat mat;
    QVec central; // ab coordinates, constrained to the +1 eigenspace

    explicit ExtendedElement(const InvolutiveAlgebra& alg)
        : mat(alg), central(zero_vec(alg.ab_dim())) {}
    ExtendedElement(JMat m, QVec c) : mat(std::move(m)), central(std::move(c)) {}
};

// Cocycle adapted to a fixed-point subalgebra. The corner cut of psi sits
// between -1 and 0, while tau reflects indices about L/2 (L = 0 for the
// odd-orthogonal involution, -1 for the symplectic and even-orthogonal
// ones). When the two disagree, psi is shifted by the coboundary of
// f(X) = sum_i w_i X_ii, with w_i the difference between the raw cut and
// the reflection-symmetric cut (half weight at i = L/2 for even L). The
// shifted cocycle represents the same class and takes values in the
// bar-fixed part of R^ab on pairs from the subalgebra; the raw psi does
// not once the cut is misaligned (e.g. tau_B over coefficients with a
// nontrivial minus part).
QVec psi_fixed(const JMat& x, const JMat& y, TauFlavor flavor, long l = 0);

// [A,B]' = ([X,Y], psi_fixed(X,Y)); central parts never
// contribute. Matrix parts must lie in the (-1)-eigenspace of tau:
// NotInSubalgebra.
ExtendedElement extended_bracket(const ExtendedElement& a, const ExtendedElement& b, TauFlavor flavor,
                                 long l = 0);

// psi_fixed lands in (R^ab)_1 on sampled pairs from the fixed-point
// subalgebra.
bool kernel_fixed_check(const InvolutiveAlgebra& alg, TauFlavor flavor, long l, int samples,
                        std::uint64_t seed);

} // namespace jhom

#endif
