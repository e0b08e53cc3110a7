#ifndef JHOM_FOCK_HPP
#define JHOM_FOCK_HPP

#include <cstdint>

#include "jhom/jmat.hpp"

namespace jhom {

enum class FermionKind { psi, psi_star };

struct FermionOp {
    long mode = 0; // in [-m, m)
    FermionKind kind = FermionKind::psi;
};

// Mode-window truncation of the fermionic Fock space: creation modes are
// psi_i for 0 <= i < m and psi_i^* for -m <= i < 0, giving dimension 2^{2m}.
// Normal-ordered bilinears with window indices act exactly on this space.
class FockSpace {
public:
    explicit FockSpace(int m);

    int half_width() const { return m_; }
    long long dim() const { return 1ll << (2 * m_); }

    // basis state |vac> = empty occupation
    QVec vacuum() const;

    // slot position of the creation mode behind an operator; the operator is
    // a creator when psi with i >= 0 or psi^* with i < 0, else an annihilator
    int slot(const FermionOp& op) const;
    bool is_creator(const FermionOp& op) const;

    QVec apply(const FermionOp& op, const QVec& state) const;

    // <psi_i psi_j^*> = [i == j < 0], <psi_j^* psi_i> = [i == j >= 0]
    static Rat pairing_psi_psistar(long i, long j);
    static Rat pairing_psistar_psi(long i, long j);

    // normal-ordered bilinear :psi_i psi_j^*: as a dense operator matrix
    QMat rho(long i, long j) const;
    // linear extension over the finite entries of a window-supported matrix
    QMat rho_of(const JMat& a) const;

    // [rho(a), rho(b)] == rho([a,b]) + c(a,b) Id with c the entrywise
    // double-sum central term
    bool bracket_formula_check(const JMat& a, const JMat& b) const;

private:
    int m_ = 0;
    void check_mode(long i) const;
};

} // namespace jhom

#endif
