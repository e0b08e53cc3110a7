#ifndef JHOM_FTISO_HPP
#define JHOM_FTISO_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "jhom/jmat.hpp"
#include "jhom/lie.hpp"

namespace jhom {

// Finite square matrix indexed by a window I whose entries are elements of
// the banded matrix algebra over R. Realizes the target of the block
// decomposition E_{m+r|I|, n+s|I|} -> e_{m,n}(E_{r,s}).
class BlockMatrix {
public:
    BlockMatrix(const InvolutiveAlgebra& alg, std::vector<long> window)
        : alg_(&alg), window_(std::move(window)) {}

    const std::vector<long>& window() const { return window_; }
    const InvolutiveAlgebra& alg() const { return *alg_; }
    const std::map<std::pair<long, long>, JMat>& blocks() const { return blocks_; }

    // block(m,n) += j, indices taken from the window
    void add_block(long m, long n, const JMat& j);
    // zero JMat when absent
    JMat block(long m, long n) const;
    bool is_zero() const { return blocks_.empty(); }

    BlockMatrix mul(const BlockMatrix& o) const;
    BlockMatrix sub(const BlockMatrix& o) const;
    BlockMatrix bracket(const BlockMatrix& o) const;
    bool operator==(const BlockMatrix& o) const;

private:
    const InvolutiveAlgebra* alg_;
    std::vector<long> window_;
    std::map<std::pair<long, long>, JMat> blocks_;
};

// Index decomposition a = m + r|I| with the representative m in the window;
// unique because the window is a complete residue system mod |I|.
std::pair<long, long> window_decompose(const std::vector<long>& window, long a);

// Banded to block: E_{a,b}(c) -> e_{m,n}(E_{r,s}(c)). Shift parts are outside
// the entrywise formula: ShiftPartPresent.
BlockMatrix phi(const InvolutiveAlgebra& alg, const std::vector<long>& window, const JMat& x);
// Two-sided inverse on finite-support elements.
JMat phi_inverse(const BlockMatrix& b);

// For each sampled element of the (-1)-eigenspace of the family's
// anti-involution, the block image must satisfy t(B) J + J B = 0 where the
// block transpose conjugates entries with the star of the banded algebra.
bool restriction_check(const InvolutiveAlgebra& alg, LieFamily family, int n, int samples,
                       std::uint64_t seed);

// phi([X,Y]) == [phi(X), phi(Y)] on random banded finite pairs.
bool bracket_preservation(const InvolutiveAlgebra& alg, const std::vector<long>& window, int samples,
                          std::uint64_t seed);

} // namespace jhom

#endif
