#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "jhom/algebra.hpp"
#include "jhom/errors.hpp"

using namespace jhom;

TEST_CASE("catalog algebras pass all construction axioms") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        InvolutiveAlgebra a = catalog_algebra(name);
        CHECK(a.dim() >= 1);
        // eigenspaces decompose R
        CHECK(a.plus_basis().size() + a.minus_basis().size() == static_cast<std::size_t>(a.dim()));
    }
}

TEST_CASE("base field") {
    InvolutiveAlgebra k = catalog_algebra("k");
    CHECK(k.dim() == 1);
    CHECK(k.plus_basis().size() == 1);
    CHECK(k.minus_basis().empty());
    CHECK(k.ab_dim() == 1);
    CHECK(k.ab_fixed_basis().size() == 1);
}

TEST_CASE("dual numbers with eps-bar = -eps") {
    InvolutiveAlgebra a = catalog_algebra("dual-minus");
    CHECK(a.plus_basis().size() == 1);  // span{1}
    CHECK(a.minus_basis().size() == 1); // span{eps}
    QVec eps = a.basis_vec(1);
    CHECK(vec_is_zero(a.mul(eps, eps)));
    // commutative, so R^ab = R; fixed part is span{1}
    CHECK(a.ab_dim() == 2);
    CHECK(a.ab_fixed_basis().size() == 1);
}

TEST_CASE("2x2 matrices with transpose involution") {
    InvolutiveAlgebra a = catalog_algebra("m2");
    CHECK(a.plus_basis().size() == 3);  // symmetric matrices
    CHECK(a.minus_basis().size() == 1); // antisymmetric
    // [R,R] = traceless matrices, so the abelianization is 1-dimensional
    CHECK(a.ab_dim() == 1);
    CHECK(a.ab_fixed_basis().size() == 1);
    // trace of e12*e21 - e21*e12 dies in R^ab
    QVec comm = a.mul(a.basis_vec(1), a.basis_vec(2));
    vec_sub(comm, a.mul(a.basis_vec(2), a.basis_vec(1)));
    CHECK(vec_is_zero(a.ab_project(comm)));
}

TEST_CASE("identity map on M2 is rejected as involution") {
    // overline(ab) != b-bar a-bar for the identity on a noncommutative algebra
    InvolutiveAlgebra good = catalog_algebra("m2");
    InvolutiveAlgebra::Spec s;
    s.dim = 4;
    s.labels = {"e11", "e12", "e21", "e22"};
    s.mult.assign(16, zero_vec(4));
    auto idx = [](int a, int b) { return 2 * a + b; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c) s.mult[idx(a, b) * 4 + idx(c, d)][idx(a, d)] = 1;
    s.unit = zero_vec(4);
    s.unit[0] = 1;
    s.unit[3] = 1;
    s.involution = QMat::identity(4);
    CHECK_THROWS_AS(InvolutiveAlgebra::make(s), AxiomViolation);
}

TEST_CASE("eigen split decomposition r = (r+rbar)/2 + (r-rbar)/2") {
    for (const auto& name : catalog_names()) {
        InvolutiveAlgebra a = catalog_algebra(name);
        for (int i = 0; i < a.dim(); ++i) {
            QVec r = a.basis_vec(i);
            QVec plus = a.bar(r);
            vec_add(plus, r);
            QVec minus = r;
            vec_sub(minus, a.bar(r));
            // plus/2 is bar-fixed, minus/2 is bar-negated
            CHECK(a.bar(plus) == plus);
            QVec mneg = a.bar(minus);
            vec_add(mneg, minus);
            CHECK(vec_is_zero(mneg));
        }
    }
}

TEST_CASE("induced involution on the abelianization is involutive") {
    for (const auto& name : catalog_names()) {
        InvolutiveAlgebra a = catalog_algebra(name);
        for (int i = 0; i < a.ab_dim(); ++i) {
            QVec e = zero_vec(a.ab_dim());
            e[i] = 1;
            CHECK(a.ab_bar(a.ab_bar(e)) == e);
        }
    }
}

TEST_CASE("algebra spec file round trip") {
    std::istringstream in(R"(
name dual
dim 2
label 0 1
label 1 eps
unit 0 1
sc 0 0 0 1
sc 0 1 1 1
sc 1 0 1 1
inv 0 0 1
inv 1 1 -1
)");
    InvolutiveAlgebra a = InvolutiveAlgebra::make(load_algebra_spec(in));
    CHECK(a.dim() == 2);
    CHECK(a.minus_basis().size() == 1);
    CHECK(a.name() == "dual");
}

TEST_CASE("malformed spec files are rejected") {
    std::istringstream noDim("label 0 x\n");
    CHECK_THROWS_AS(load_algebra_spec(noDim), ParseError);
    std::istringstream badKw("dim 1\nfrobnicate 1 2\n");
    CHECK_THROWS_AS(load_algebra_spec(badKw), ParseError);
    std::istringstream badRat("dim 1\nsc 0 0 0 one\n");
    CHECK_THROWS_AS(load_algebra_spec(badRat), ParseError);
}
