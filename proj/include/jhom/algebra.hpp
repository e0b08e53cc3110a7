#ifndef JHOM_ALGEBRA_HPP
#define JHOM_ALGEBRA_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "jhom/linalg.hpp"
#include "jhom/rational.hpp"

namespace jhom {

// Finite-dimensional associative unital algebra over the rationals with a
// k-linear anti-involution, given by structure constants. Elements are
// coordinate vectors in the stored basis. Immutable once constructed; all
// axioms (associativity, unit laws, anti-involution) are checked eagerly.
class InvolutiveAlgebra {
public:
    struct Spec {
        std::string name = "custom";
        int dim = 0;
        std::vector<std::string> labels;
        // mult[i*dim+j] = coordinates of e_i * e_j
        std::vector<QVec> mult;
        QVec unit;
        // involution(i,j) = coefficient of e_i in bar(e_j)
        QMat involution;
    };

    static InvolutiveAlgebra make(Spec spec);

    const std::string& name() const { return spec_.name; }
    int dim() const { return spec_.dim; }
    const std::vector<std::string>& labels() const { return spec_.labels; }
    const QVec& unit() const { return spec_.unit; }

    QVec mul(const QVec& a, const QVec& b) const;
    QVec bar(const QVec& a) const;
    QVec basis_vec(int i) const;
    QVec scalar(const Rat& c) const; // c * 1

    // ±1 eigenspaces of the involution (R = R_1 ⊕ R_{-1} in char 0)
    const std::vector<QVec>& plus_basis() const { return plus_basis_; }
    const std::vector<QVec>& minus_basis() const { return minus_basis_; }

    // Abelianization R^ab = R/[R,R]; coordinates of length ab_dim().
    int ab_dim() const { return static_cast<int>(ab_cols_.size()); }
    QVec ab_project(const QVec& a) const;
    QVec ab_lift(const QVec& ab) const;
    QVec ab_bar(const QVec& ab) const; // induced involution on R^ab
    // basis of (R^ab)_1, the +1 eigenspace of the induced involution
    const std::vector<QVec>& ab_fixed_basis() const { return ab_fixed_basis_; }
    QVec ab_fixed_project(const QVec& ab) const; // (1 + bar)/2
    bool ab_fixed_contains(const QVec& ab) const;

    std::string format_elem(const QVec& a) const;

private:
    explicit InvolutiveAlgebra(Spec spec) : spec_(std::move(spec)) {}
    void validate() const;
    void build_derived();

    Spec spec_;
    std::vector<QVec> plus_basis_, minus_basis_;
    RowSpace comm_span_;        // span{ab - ba}
    std::vector<int> ab_cols_;  // non-pivot coordinates indexing the quotient basis
    QMat ab_bar_mat_;
    std::vector<QVec> ab_fixed_basis_;
    RowSpace ab_fixed_span_;
};

// Built-in coefficient algebras:
//   k, dual-plus, dual-minus, trunc3-plus, trunc3-minus, m2, kz2
InvolutiveAlgebra catalog_algebra(const std::string& name);
std::vector<std::string> catalog_names();

// Text-file loader; see README for the format.
InvolutiveAlgebra::Spec load_algebra_spec(std::istream& in);
InvolutiveAlgebra load_algebra_file(const std::string& path);

} // namespace jhom

#endif
