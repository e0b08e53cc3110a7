#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "jhom/errors.hpp"
#include "jhom/ftiso.hpp"
#include "test_util.hpp"

using namespace jhom;
using testutil::random_fin_jmat;

namespace {
const InvolutiveAlgebra& K() {
    static InvolutiveAlgebra k = catalog_algebra("k");
    return k;
}
const InvolutiveAlgebra& M2() {
    static InvolutiveAlgebra a = catalog_algebra("m2");
    return a;
}
} // namespace

TEST_CASE("index decomposition picks the window representative") {
    std::vector<long> i3{-1, 0, 1};
    CHECK(window_decompose(i3, 0) == std::pair<long, long>{0, 0});
    CHECK(window_decompose(i3, 3) == std::pair<long, long>{0, 1});
    CHECK(window_decompose(i3, 4) == std::pair<long, long>{1, 1});
    CHECK(window_decompose(i3, -2) == std::pair<long, long>{1, -1});
    std::vector<long> i4{-2, -1, 0, 1};
    CHECK(window_decompose(i4, -3) == std::pair<long, long>{1, -1});
    CHECK(window_decompose(i4, 2) == std::pair<long, long>{-2, 1});
}

TEST_CASE("block decomposition of matrix units") {
    std::vector<long> i3{-1, 0, 1};
    BlockMatrix b = phi(K(), i3, JMat::E(K(), 0, 0, K().unit()));
    CHECK(b.blocks().size() == 1);
    CHECK(b.block(0, 0) == JMat::E(K(), 0, 0, K().unit()));

    BlockMatrix c = phi(K(), i3, JMat::E(K(), 3, 4, K().unit()));
    CHECK(c.block(0, 1) == JMat::E(K(), 1, 1, K().unit()));

    std::vector<long> i4{-2, -1, 0, 1};
    BlockMatrix d = phi(K(), i4, JMat::E(K(), -3, 2, K().unit()));
    CHECK(d.block(1, -2) == JMat::E(K(), -1, 1, K().unit()));
}

TEST_CASE("shift parts are rejected") {
    std::vector<long> i3{-1, 0, 1};
    CHECK_THROWS_AS(phi(K(), i3, JMat::right_shift(K())), ShiftPartPresent);
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(31);
    std::vector<long> i3{-1, 0, 1};
    std::vector<long> i4{-2, -1, 0, 1};
    for (int t = 0; t < 100; ++t) {
        JMat x = random_fin_jmat(M2(), rng, 4, 9);
        CHECK(phi_inverse(phi(M2(), i3, x)) == x);
        CHECK(phi_inverse(phi(M2(), i4, x)) == x);
    }
    // and the other direction from a random block matrix
    for (int t = 0; t < 20; ++t) {
        BlockMatrix b(M2(), i3);
        std::uniform_int_distribution<int> wi(0, 2);
        for (int e = 0; e < 3; ++e) b.add_block(i3[wi(rng)], i3[wi(rng)], random_fin_jmat(M2(), rng, 2, 2));
        BlockMatrix rt = phi(M2(), i3, phi_inverse(b));
        CHECK(rt == b);
    }
}

TEST_CASE("bracket preservation") {
    std::vector<long> i3{-1, 0, 1};
    CHECK(bracket_preservation(K(), i3, 50, 7));
    CHECK(bracket_preservation(M2(), i3, 50, 8));
    std::vector<long> i4{-2, -1, 0, 1};
    CHECK(bracket_preservation(M2(), i4, 50, 9));
    // explicit pair: phi([E01, E10]) = [phi(E01), phi(E10)]
    JMat x = JMat::E(K(), 0, 1, K().unit());
    JMat y = JMat::E(K(), 1, 0, K().unit());
    CHECK(phi(K(), i3, x.bracket(y)) == phi(K(), i3, x).bracket(phi(K(), i3, y)));
    CHECK(phi(K(), i3, x.bracket(x)).is_zero());
}

TEST_CASE("fixed-point subalgebras restrict to the block relation") {
    for (const auto& name : {"k", "dual-minus", "m2"}) {
        InvolutiveAlgebra alg = catalog_algebra(name);
        for (int n : {2, 3}) {
            CHECK(restriction_check(alg, LieFamily::o_odd, n, 25, 41));
            CHECK(restriction_check(alg, LieFamily::sp, n, 25, 42));
            CHECK(restriction_check(alg, LieFamily::o_even, n, 25, 43));
        }
    }
}

TEST_CASE("a generic element breaks the block relation") {
    // sanity: without the fixed-point projection the relation fails
    std::mt19937_64 rng(44);
    std::vector<long> window = family_window(LieFamily::o_odd, 2);
    JMat x = JMat::E(K(), 0, 3, K().unit());
    BlockMatrix b = phi(K(), window, x);
    bool all_zero = true;
    for (long p : window)
        for (long q : window) {
            JMat acc(K());
            for (long r : window) {
                if (r == -q) acc = acc.add(b.block(r, p).star());
                if (p == -r) acc = acc.add(b.block(r, q));
            }
            if (!acc.is_zero()) all_zero = false;
        }
    CHECK_FALSE(all_zero);
}
