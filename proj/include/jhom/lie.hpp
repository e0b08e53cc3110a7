#ifndef JHOM_LIE_HPP
#define JHOM_LIE_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "jhom/algebra.hpp"

namespace jhom {

enum class LieFamily { gl, o_odd, sp, o_even };

LieFamily parse_family(const std::string& s);
std::string family_name(LieFamily f);

// Index window: for the odd orthogonal family [-n, n], for the symplectic and
// even orthogonal families [-n, n-1]; for gl the window of total size n.
std::vector<long> family_window(LieFamily f, int n);

// Finite-dimensional Lie algebra of window matrices over an involutive
// algebra, presented by an explicit k-basis and exact structure constants.
// The basis is the reduced nullspace of X -> t(X) J + J X (t = entrywise
// transpose-with-involution), so coordinates of any member can be read off
// at the free positions.
class LiePresentation {
public:
    LieFamily family;
    int n = 0;
    std::shared_ptr<const InvolutiveAlgebra> alg;
    std::vector<long> window;

    int dim() const { return static_cast<int>(null_.basis.size()); }
    int window_size() const { return static_cast<int>(window.size()); }

    // flat variable coordinates: position (i,j) lex over the window, then the
    // coefficient-algebra basis (R_1 vectors before R_{-1} vectors)
    int var_dim() const { return window_size() * window_size() * alg->dim(); }
    const std::vector<QVec>& basis() const { return null_.basis; }

    // [b_i, b_j] expanded in the basis
    const SVec& bracket_coords(int i, int j) const { return sc_[static_cast<std::size_t>(i) * dim() + j]; }

    // window matrix of a basis element: entry (r,c) as algebra coords
    QVec basis_entry(int b, int r, int c) const;
    // expansion of an arbitrary member given by variable coordinates;
    // throws InternalMismatch when the vector is outside the algebra
    QVec member_coords(const QVec& var_vec) const;

    // variable coordinates of e_{r,c}(a), window positions r, c
    QVec var_of_entry(int r, int c, const QVec& a) const;

    friend LiePresentation build_lie(LieFamily f, int n, std::shared_ptr<const InvolutiveAlgebra> alg);

private:
    Nullspace null_;
    std::vector<SVec> sc_;
    std::vector<QVec> eigen_basis_;     // R_1 then R_{-1} vectors, std coords
    QMat eigen_to_std_, std_to_eigen_;  // change of basis on the coefficient algebra
    QVec bracket_var(const QVec& x, const QVec& y) const;
    friend struct LieOps;
};

LiePresentation build_lie(LieFamily f, int n, std::shared_ptr<const InvolutiveAlgebra> alg);

// Structure-preserving inclusion L_n -> L_{n+1} matching basis elements by
// window index. images[i] = expansion of the i-th small basis element in the
// large basis; bracket_compatible records the exhaustive pairwise check.
struct InclusionMap {
    std::vector<QVec> images;
    bool bracket_compatible = false;
};
InclusionMap include_lie(const LiePresentation& small, const LiePresentation& large);

// Exhaustive Jacobi identity check on all basis triples.
bool jacobi_audit(const LiePresentation& l);
// Same check on a corrupted copy, used as a negative control in tests.
bool jacobi_audit_perturbed(const LiePresentation& l, int i, int j, int k, const Rat& delta);

// Sparse text export: one "i j k value" line per structure constant.
void export_structure_constants(const LiePresentation& l, std::ostream& out);

} // namespace jhom

#endif
