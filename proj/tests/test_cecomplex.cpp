#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "jhom/cecomplex.hpp"
#include "jhom/errors.hpp"

using namespace jhom;

namespace {
std::shared_ptr<const InvolutiveAlgebra> cat(const std::string& name) {
    return std::make_shared<InvolutiveAlgebra>(catalog_algebra(name));
}
} // namespace

TEST_CASE("abelian algebras have the full exterior algebra as homology") {
    // 1x1 matrices over a commutative coefficient algebra commute
    LiePresentation l = build_lie(LieFamily::gl, 1, cat("dual-plus"));
    REQUIRE(l.dim() == 2);
    ChainComplex c = build_ce(l, 2);
    CHECK(d_squared_zero(c));
    BettiReport r = betti(c, RankMethod::exact);
    CHECK(r.betti == std::vector<long long>{1, 2, 1});
}

TEST_CASE("three dimensional orthogonal algebra") {
    LiePresentation l = build_lie(LieFamily::o_odd, 1, cat("k"));
    ChainComplex c = build_ce(l, 3);
    CHECK(d_squared_zero(c));
    BettiReport r = betti(c, RankMethod::exact);
    CHECK(r.betti == std::vector<long long>{1, 0, 0, 1});
    CHECK(r.primitives == std::vector<long long>{0, 0, 1});
}

TEST_CASE("rank ten symplectic algebra, exact and modular agree") {
    LiePresentation l = build_lie(LieFamily::sp, 2, cat("k"));
    ChainComplex c = build_ce(l, 10);
    CHECK(d_squared_zero(c));
    BettiReport ex = betti(c, RankMethod::exact);
    std::vector<long long> expect{1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1};
    CHECK(ex.betti == expect);
    std::vector<long long> prim(10, 0);
    prim[2] = 1; // degree 3
    prim[6] = 1; // degree 7
    CHECK(ex.primitives == prim);
    BettiReport mod = betti(c, RankMethod::modular, 9001);
    CHECK(mod.betti == expect);
    CHECK(mod.primes.size() >= 2);
}

TEST_CASE("five dimensional orthogonal matches the symplectic series") {
    ChainComplex a = build_ce(build_lie(LieFamily::sp, 2, cat("k")), 10);
    ChainComplex b = build_ce(build_lie(LieFamily::o_odd, 2, cat("k")), 10);
    BettiReport ra = betti(a, RankMethod::modular, 3);
    BettiReport rb = betti(b, RankMethod::modular, 4);
    CHECK(ra.betti == rb.betti);
}

TEST_CASE("four dimensional orthogonal splits as two rank one pieces") {
    LiePresentation l = build_lie(LieFamily::o_even, 2, cat("k"));
    REQUIRE(l.dim() == 6);
    ChainComplex c = build_ce(l, 6);
    BettiReport r = betti(c, RankMethod::exact);
    CHECK(r.betti == std::vector<long long>{1, 0, 0, 2, 0, 0, 1});
    CHECK(r.primitives == std::vector<long long>{0, 0, 2, 0, 0, 0});
}

TEST_CASE("capped complex reports one degree below the cap") {
    LiePresentation l = build_lie(LieFamily::sp, 2, cat("k"));
    ChainComplex c = build_ce(l, 3);
    CHECK(c.built_top() == 3);
    CHECK(c.reported_top() == 2);
    BettiReport r = betti(c, RankMethod::exact);
    CHECK(r.betti == std::vector<long long>{1, 0, 0});
}

TEST_CASE("memory budget aborts a build") {
    LiePresentation l = build_lie(LieFamily::sp, 2, cat("k"));
    CHECK_THROWS_AS(build_ce(l, 5, 1024), BudgetExceeded);
}

TEST_CASE("primitive exponent extraction") {
    // (1+t)(1+t^3) = 1 + t + t^3 + t^4
    CHECK(primitive_dims({1, 1, 0, 1, 1}) == std::vector<long long>{1, 0, 1, 0});
    // (1-t^2)^{-1}
    CHECK(primitive_dims({1, 0, 1, 0, 1}) == std::vector<long long>{0, 1, 0, 0});
    // (1+t^3)^2 = 1 + 2t^3 + t^6
    CHECK(primitive_dims({1, 0, 0, 2, 0, 0, 1}) == std::vector<long long>{0, 0, 2, 0, 0, 0});
    CHECK_THROWS_AS(primitive_dims({1, 0, 1, 1, 0}), NotFreeCommutative);
    CHECK_THROWS_AS(primitive_dims({0, 1}), NotFreeCommutative);
}
