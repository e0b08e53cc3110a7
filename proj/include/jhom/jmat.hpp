#ifndef JHOM_JMAT_HPP
#define JHOM_JMAT_HPP

#include <map>
#include <string>
#include <utility>

#include "jhom/algebra.hpp"

namespace jhom {

// Anti-involution family acting on banded Z x Z matrices.
// tau_l   : E_{r,s}(a) -> (-1)^{r+s} E_{l-s,l-r}(abar)
// tau_l_s : E_{r,s}(a) -> E_{l-s,l-r}(abar)
// tau_B = tau_0_s, tau_C = tau_{-1}, tau_D = tau_{-1}_s.
enum class TauFlavor { tau_l, tau_l_s, tau_B, tau_C, tau_D };

// Computable element of the banded matrix algebra over an involutive
// coefficient algebra: a finite-support part plus a Laurent-shift part
// sum_a r_a S^a with S^a = sum_i e_{i,i+a}. The infinite-support matrices
// J_l, J_l^s, J_B, ... are never materialized; their conjugation actions
// have closed forms on this data model.
class JMat {
public:
    using FinMap = std::map<std::pair<long, long>, QVec>;
    using ShiftMap = std::map<long, QVec>;

    explicit JMat(const InvolutiveAlgebra& alg) : alg_(&alg) {}

    static JMat E(const InvolutiveAlgebra& alg, long i, long j, QVec coeff);
    static JMat shift(const InvolutiveAlgebra& alg, long offset, QVec coeff);
    // S^0 with unit coefficient
    static JMat one(const InvolutiveAlgebra& alg);
    // S^1 with unit coefficient (the right-shift N)
    static JMat right_shift(const InvolutiveAlgebra& alg);

    const InvolutiveAlgebra& alg() const { return *alg_; }
    const FinMap& fin() const { return fin_; }
    const ShiftMap& shifts() const { return shift_; }

    void add_entry(long i, long j, const QVec& coeff);
    void add_shift(long offset, const QVec& coeff);

    bool is_zero() const { return fin_.empty() && shift_.empty(); }
    bool has_shift_part() const { return !shift_.empty(); }
    long bandwidth() const;

    JMat add(const JMat& o) const;
    JMat sub(const JMat& o) const;
    JMat neg() const;
    JMat scaled(const Rat& c) const;
    JMat mul(const JMat& o) const;
    JMat bracket(const JMat& o) const { return mul(o).sub(o.mul(*this)); }

    JMat transpose() const;
    JMat star() const;
    JMat tau(TauFlavor flavor, long l = 0) const;
    // (X - tau(X))/2, a member of the (-1)-fixed subalgebra of tau
    JMat fixed_point_project(TauFlavor flavor, long l = 0) const;

    // I_sigma X I_tau with sigma, tau in {+1, -1}; mixed signs always give a
    // finite-support result. Equal signs on a shift part would leave a
    // half-infinite pattern outside this data model: ShiftPartPresent.
    JMat corner_compress(int left_sign, int right_sign) const;

    // sum of diagonal entries pushed through the abelianization; throws
    // NotTraceClass if the shift part has a nonzero offset-0 coefficient
    QVec trace_ab() const;

    // entry (i,j) as an algebra element (finite + shift contributions)
    QVec entry(long i, long j) const;

    bool operator==(const JMat& o) const;
    std::string str() const;

private:
    void prune();
    const InvolutiveAlgebra* alg_;
    FinMap fin_;
    ShiftMap shift_;
};

// Total order for use as container key.
int jmat_cmp(const JMat& a, const JMat& b);
struct JMatLess {
    bool operator()(const JMat& a, const JMat& b) const { return jmat_cmp(a, b) < 0; }
};

// Checks the pair of conjugation identities relating levels l and l+2:
// the shift conjugate of tau_l equals tau_{l+2} after Ad by the right shift,
// and the corresponding anti-diagonal kernel picks up a sign.
bool shift_conjugation_check(const InvolutiveAlgebra& alg, long l, const JMat& x);

// Literal syntax for tests and the CLI: sums of E[i,j](expr) and S^a(expr),
// with expr a rational/basis-label combination, e.g. "E[0,1](1) - S^2(3*eps)".
JMat parse_jmat(const InvolutiveAlgebra& alg, const std::string& text);

} // namespace jhom

#endif
