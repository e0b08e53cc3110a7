#include "jhom/fock.hpp"

#include "jhom/cocycle.hpp"
#include "jhom/errors.hpp"

namespace jhom {

FockSpace::FockSpace(int m) : m_(m) {
    if (m < 1 || m > 6) throw InvalidParameter("window half-width must be in [1, 6]");
}

QVec FockSpace::vacuum() const {
    QVec v = zero_vec(static_cast<int>(dim()));
    v[0] = 1;
    return v;
}

void FockSpace::check_mode(long i) const {
    if (i < -m_ || i >= m_) throw ModeOutOfWindow("mode " + std::to_string(i) + " outside the window");
}

int FockSpace::slot(const FermionOp& op) const {
    check_mode(op.mode);
    // particle modes 0..m-1 at slots 0..m-1, hole modes -1..-m at slots m..2m-1
    return op.mode >= 0 ? static_cast<int>(op.mode) : m_ + static_cast<int>(-1 - op.mode);
}

bool FockSpace::is_creator(const FermionOp& op) const {
    check_mode(op.mode);
    return (op.kind == FermionKind::psi) == (op.mode >= 0);
}

QVec FockSpace::apply(const FermionOp& op, const QVec& state) const {
    int s = slot(op);
    bool create = is_creator(op);
    long long n = dim();
    QVec out = zero_vec(static_cast<int>(n));
    long long bit = 1ll << s;
    long long below = bit - 1;
    for (long long b = 0; b < n; ++b) {
        if (is_zero(state[b])) continue;
        bool occupied = (b & bit) != 0;
        if (create == occupied) continue;
        int par = __builtin_popcountll(b & below);
        Rat sign = (par % 2 == 0) ? 1 : -1;
        out[b ^ bit] += sign * state[b];
    }
    return out;
}

Rat FockSpace::pairing_psi_psistar(long i, long j) { return (i == j && i < 0) ? 1 : 0; }
Rat FockSpace::pairing_psistar_psi(long i, long j) { return (i == j && i >= 0) ? 1 : 0; }

QMat FockSpace::rho(long i, long j) const {
    check_mode(i);
    check_mode(j);
    int n = static_cast<int>(dim());
    QMat out(n, n);
    Rat pair = pairing_psi_psistar(i, j);
    for (int b = 0; b < n; ++b) {
        QVec e = zero_vec(n);
        e[b] = 1;
        QVec v = apply({i, FermionKind::psi}, apply({j, FermionKind::psi_star}, e));
        if (!is_zero(pair)) v[b] -= pair;
        for (int r = 0; r < n; ++r) out.at(r, b) = v[r];
    }
    return out;
}

QMat FockSpace::rho_of(const JMat& a) const {
    if (a.has_shift_part()) throw ShiftPartPresent("operator image needs finite support");
    if (a.alg().dim() != 1) throw InvalidParameter("fermionic image is defined over the base field");
    int n = static_cast<int>(dim());
    QMat out(n, n);
    for (const auto& [ij, c] : a.fin()) {
        QMat r = rho(ij.first, ij.second);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) out.at(p, q) += c[0] * r.at(p, q);
    }
    return out;
}

bool FockSpace::bracket_formula_check(const JMat& a, const JMat& b) const {
    QMat ra = rho_of(a);
    QMat rb = rho_of(b);
    QMat lhs = ra.mul(rb).sub(rb.mul(ra));
    QMat rhs = rho_of(a.bracket(b));
    QVec c = japanese_cocycle(a, b);
    int n = static_cast<int>(dim());
    for (int i = 0; i < n; ++i) rhs.at(i, i) += c[0];
    return lhs.sub(rhs).is_zero_mat();
}

} // namespace jhom
