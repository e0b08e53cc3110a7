#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "jhom/dihedral.hpp"
#include "jhom/errors.hpp"

using namespace jhom;

namespace {

TensorChain random_chain(const InvolutiveAlgebra& alg, int n, std::mt19937_64& rng, int nterms = 4) {
    long long cd = 1;
    for (int i = 0; i <= n; ++i) cd *= alg.dim();
    std::uniform_int_distribution<long long> idx(0, cd - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    TensorChain c;
    c.n = n;
    for (int t = 0; t < nterms; ++t) chain_add(c, idx(rng), coeff(rng));
    return c;
}

std::vector<long long> betti_of(const InvolutiveAlgebra& alg, int max_n, DihedralVariant v) {
    std::vector<long long> out;
    for (const auto& h : homology_range(alg, max_n, v)) out.push_back(h.betti);
    return out;
}

} // namespace

TEST_CASE("group actions on small tensors") {
    InvolutiveAlgebra m2 = catalog_algebra("m2");
    // x.(a x b) = -b x a
    TensorChain ab = elementary_tensor(1, {1, 2}, 4);
    TensorChain ba = elementary_tensor(1, {2, 1}, 4);
    for (auto& [k, v] : ba.terms) v = -v;
    CHECK(act_x(m2, ab) == ba);
    // y at index 0 is the involution itself: bar(e12) = e21
    TensorChain e12 = elementary_tensor(0, {1}, 4);
    TensorChain e21 = elementary_tensor(0, {2}, 4);
    CHECK(act_y(m2, e12, false) == e21);
    // y.(a x b x c) = -abar x cbar x bbar
    InvolutiveAlgebra dm = catalog_algebra("dual-minus");
    TensorChain abc = elementary_tensor(2, {0, 1, 1}, 2);
    TensorChain expect = elementary_tensor(2, {0, 1, 1}, 2); // two bars on eps cancel
    for (auto& [k, v] : expect.terms) v = -v;
    CHECK(act_y(dm, abc, false) == expect);
    // one eps picks up a single sign from the involution
    TensorChain ae = elementary_tensor(1, {0, 1}, 2);
    TensorChain ye = elementary_tensor(1, {0, 1}, 2); // reversal keeps slot 0 first
    // sign: (-1)^{1*2/2} = -1, bar(eps) = -eps gives another -1
    CHECK(act_y(dm, ae, false) == ye);
}

TEST_CASE("dihedral relations hold as operators") {
    std::mt19937_64 rng(21);
    for (const auto& name : {"dual-minus", "m2", "kz2"}) {
        InvolutiveAlgebra alg = catalog_algebra(name);
        int top = alg.dim() > 2 ? 3 : 6;
        for (int n = 0; n <= top; ++n)
            for (int t = 0; t < 3; ++t) {
                TensorChain c = random_chain(alg, n, rng);
                TensorChain xc = c;
                for (int k = 0; k <= n; ++k) xc = act_x(alg, xc);
                CHECK(xc == c);
                CHECK(act_y(alg, act_y(alg, c, false), false) == c);
                // y x y = x^{-1}, i.e. x (y x y) = id
                TensorChain w = act_y(alg, act_x(alg, act_y(alg, c, false)), false);
                CHECK(act_x(alg, w) == c);
                // the skew twist only changes the sign, not the relations
                TensorChain s = act_y(alg, act_y(alg, c, true), true);
                CHECK(s == c);
            }
    }
}

TEST_CASE("hochschild boundary on small tensors") {
    InvolutiveAlgebra m2 = catalog_algebra("m2");
    // b(a x b) = ab - ba with a = e12, b = e21
    TensorChain ab = elementary_tensor(1, {1, 2}, 4);
    TensorChain expect;
    expect.n = 0;
    chain_add(expect, 0, 1);  // e12 e21 = e11
    chain_add(expect, 3, -1); // e21 e12 = e22
    CHECK(hochschild_b(m2, ab) == expect);

    InvolutiveAlgebra k = catalog_algebra("k");
    TensorChain ones = elementary_tensor(2, {0, 0, 0}, 1);
    CHECK(hochschild_b(k, ones) == elementary_tensor(1, {0, 0}, 1));

    std::mt19937_64 rng(22);
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < 4; ++t) {
            TensorChain c = random_chain(m2, n, rng);
            CHECK(hochschild_b(m2, hochschild_b(m2, c)).is_zero());
        }
}

TEST_CASE("reynolds projector is idempotent and compatible with the boundary") {
    InvolutiveAlgebra dm = catalog_algebra("dual-minus");
    std::mt19937_64 rng(23);
    for (DihedralVariant v :
         {DihedralVariant::dihedral, DihedralVariant::skew, DihedralVariant::cyclic, DihedralVariant::none})
        for (int n = 1; n <= 4; ++n) {
            CoinvariantSpace top = build_coinvariants(dm, n, v);
            CoinvariantSpace bot = build_coinvariants(dm, n - 1, v);
            for (int t = 0; t < 3; ++t) {
                TensorChain c = random_chain(dm, n, rng);
                TensorChain p = top.project(c);
                CHECK(top.project(p) == p);
                // induced boundary is independent of the representative
                TensorChain lhs = bot.project(hochschild_b(dm, p));
                TensorChain rhs = bot.project(hochschild_b(dm, c));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("homology of the base field in all variants") {
    InvolutiveAlgebra k = catalog_algebra("k");
    CHECK(betti_of(k, 8, DihedralVariant::dihedral) ==
          std::vector<long long>{1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(betti_of(k, 8, DihedralVariant::skew) == std::vector<long long>{0, 0, 1, 0, 0, 0, 1, 0, 0});
    CHECK(betti_of(k, 8, DihedralVariant::cyclic) == std::vector<long long>{1, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(betti_of(k, 4, DihedralVariant::none) == std::vector<long long>{1, 0, 0, 0, 0});
}

TEST_CASE("degree zero equals the fixed part of the abelianization") {
    for (const auto& name : catalog_names()) {
        InvolutiveAlgebra alg = catalog_algebra(name);
        DihedralHomology h = homology(alg, 0, DihedralVariant::dihedral);
        CHECK(h.betti == static_cast<long long>(alg.ab_fixed_basis().size()));
    }
}

TEST_CASE("plus and skew parts add up to the cyclic homology") {
    for (const auto& name : {"dual-minus", "dual-plus", "kz2"}) {
        InvolutiveAlgebra alg = catalog_algebra(name);
        auto hd = betti_of(alg, 4, DihedralVariant::dihedral);
        auto sk = betti_of(alg, 4, DihedralVariant::skew);
        auto hc = betti_of(alg, 4, DihedralVariant::cyclic);
        for (int n = 0; n <= 4; ++n) CHECK(hd[n] + sk[n] == hc[n]);
    }
}

TEST_CASE("eigen split of cyclic homology matches the coinvariant computation") {
    InvolutiveAlgebra k = catalog_algebra("k");
    for (int n = 0; n <= 6; ++n) CHECK(eigen_split_check(k, n));
    InvolutiveAlgebra dm = catalog_algebra("dual-minus");
    for (int n = 0; n <= 4; ++n) CHECK(eigen_split_check(dm, n));
    InvolutiveAlgebra m2 = catalog_algebra("m2");
    for (int n = 0; n <= 2; ++n) CHECK(eigen_split_check(m2, n));
}

TEST_CASE("budget guard") {
    InvolutiveAlgebra m2 = catalog_algebra("m2");
    CHECK_THROWS_AS(build_coinvariants(m2, 10, DihedralVariant::dihedral), BudgetExceeded);
}

TEST_CASE("stabilizer of the cycle coset is dihedral") {
    for (int n = 2; n <= 4; ++n) {
        StabilizerReport r = hyperoctahedral_stabilizer(n);
        CHECK(r.stab_order == 2 * n);
        CHECK(r.quoted_generators_inside);
        CHECK(r.quoted_generators_generate);
        CHECK(r.dihedral_relations);
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(r.group_order == (1ll << n) * fact);
    }
}

TEST_CASE("tensor-length action matches the chain-level action with negated reflection") {
    InvolutiveAlgebra dm = catalog_algebra("dual-minus");
    InvolutiveAlgebra m2 = catalog_algebra("m2");
    for (int n = 1; n <= 5; ++n) {
        CHECK(induced_action_check(dm, n));
        CHECK(induced_action_check(m2, n));
    }
}
