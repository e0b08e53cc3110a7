#include "jhom/cocycle.hpp"

#include <algorithm>
#include <random>

#include "jhom/errors.hpp"

namespace jhom {

namespace {

// Tr([PXP, PYP] - P[X,Y]P), P the compression to the non-negative corner,
// evaluated entrywise on a window. The defect vanishes at (i,i) once i
// exceeds the bandwidths, so the window is exhaustive.
QVec psi_via_defect(const JMat& x, const JMat& y) {
    const InvolutiveAlgebra& alg = x.alg();
    long b = std::max(x.bandwidth(), y.bandwidth());
    long top = 2 * b + 1;
    JMat z = x.bracket(y);
    QVec acc = zero_vec(alg.dim());
    for (long i = 0; i <= top; ++i) {
        for (long l = std::max(0L, i - b); l <= i + b; ++l) {
            vec_add(acc, alg.mul(x.entry(i, l), y.entry(l, i)));
            vec_sub(acc, alg.mul(y.entry(i, l), x.entry(l, i)));
        }
        vec_sub(acc, z.entry(i, i));
    }
    return alg.ab_project(acc);
}

// Tr((I+ Y I-)(I- X I+) - (I+ X I-)(I- Y I+)); every factor has finite
// support whatever the inputs are.
QVec psi_via_corners(const JMat& x, const JMat& y) {
    JMat t1 = y.corner_compress(1, -1).mul(x.corner_compress(-1, 1));
    JMat t2 = x.corner_compress(1, -1).mul(y.corner_compress(-1, 1));
    return t1.sub(t2).trace_ab();
}

} // namespace

QVec psi(const JMat& x, const JMat& y) {
    QVec corners = psi_via_corners(x, y);
    QVec defect = psi_via_defect(x, y);
    if (corners != defect) throw InternalMismatch("the two cocycle formulas disagree");
    return corners;
}

QVec japanese_cocycle(const JMat& x, const JMat& y) {
    if (x.has_shift_part() || y.has_shift_part())
        throw ShiftPartPresent("entrywise double sum needs finite support");
    const InvolutiveAlgebra& alg = x.alg();
    QVec acc = zero_vec(alg.dim());
    for (const auto& [ij, a] : x.fin()) {
        auto [i, j] = ij;
        if (i < 0 && j >= 0)
            vec_add(acc, alg.mul(a, y.entry(j, i)));
        else if (i >= 0 && j < 0)
            vec_sub(acc, alg.mul(a, y.entry(j, i)));
    }
    return alg.ab_project(acc);
}

namespace {

long reflection_level(TauFlavor flavor, long l) {
    switch (flavor) {
        case TauFlavor::tau_B: return 0;
        case TauFlavor::tau_C:
        case TauFlavor::tau_D: return -1;
        default: return l;
    }
}

} // namespace

QVec psi_fixed(const JMat& x, const JMat& y, TauFlavor flavor, long l) {
    const InvolutiveAlgebra& alg = x.alg();
    QVec out = psi(x, y);
    long L = reflection_level(flavor, l);
    if (L == -1) return out; // cut already symmetric
    JMat z = x.bracket(y);
    QVec diag = zero_vec(alg.dim());
    long span = std::abs(L) + 1;
    for (long i = -span; i <= span; ++i) {
        Rat raw = (i >= 0) ? 1 : 0;
        Rat sym = (2 * i > L) ? Rat(1) : (2 * i == L ? Rat(1, 2) : Rat(0));
        Rat w = raw - sym;
        if (w != 0) vec_add(diag, vec_scaled(z.entry(i, i), w));
    }
    vec_add(out, alg.ab_project(diag));
    return out;
}

bool cocycle_identity(const JMat& x, const JMat& y, const JMat& z) {
    QVec acc = psi(x.bracket(y), z);
    vec_add(acc, psi(y.bracket(z), x));
    vec_add(acc, psi(z.bracket(x), y));
    return vec_is_zero(acc);
}

ExtendedElement extended_bracket(const ExtendedElement& a, const ExtendedElement& b, TauFlavor flavor,
                                 long l) {
    const InvolutiveAlgebra& alg = a.mat.alg();
    for (const ExtendedElement* e : {&a, &b})
        if (!(e->mat.tau(flavor, l) == e->mat.neg()))
            throw NotInSubalgebra("matrix part is not in the fixed-point subalgebra");
    ExtendedElement out(alg);
    out.mat = a.mat.bracket(b.mat);
    out.central = alg.ab_fixed_project(psi_fixed(a.mat, b.mat, flavor, l));
    return out;
}

namespace {

JMat random_banded(const InvolutiveAlgebra& alg, std::mt19937_64& rng, long span, int entries) {
    std::uniform_int_distribution<long> idx(-span, span);
    std::uniform_int_distribution<int> coeff(-3, 3);
    JMat m(alg);
    for (int e = 0; e < entries; ++e) {
        QVec v = zero_vec(alg.dim());
        for (int i = 0; i < alg.dim(); ++i) v[i] = coeff(rng);
        m.add_entry(idx(rng), idx(rng), v);
    }
    return m;
}

} // namespace

bool kernel_fixed_check(const InvolutiveAlgebra& alg, TauFlavor flavor, long l, int samples,
                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < samples; ++t) {
        JMat x = random_banded(alg, rng, 4, 3).fixed_point_project(flavor, l);
        JMat y = random_banded(alg, rng, 4, 3).fixed_point_project(flavor, l);
        if (!alg.ab_fixed_contains(psi_fixed(x, y, flavor, l))) return false;
    }
    return true;
}

} // namespace jhom
