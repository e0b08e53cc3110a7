#ifndef JHOM_CECOMPLEX_HPP
#define JHOM_CECOMPLEX_HPP

#include <cstdint>
#include <vector>

#include "jhom/lie.hpp"
#include "jhom/modular.hpp"

namespace jhom {

enum class RankMethod { modular, exact };

// Exterior-algebra chain complex of a Lie presentation with trivial
// coefficients. boundary[n] maps degree n to degree n-1; matrices are built
// for 1 <= n <= min(cap, dim g).
struct ChainComplex {
    int cap = 0;
    int gdim = 0;
    std::vector<long long> dims;       // dims[n] = binom(gdim, n), 0 <= n <= cap
    std::vector<SparseCols> boundary;  // boundary[n] for n >= 1 (index 0 unused)

    int built_top() const { return static_cast<int>(boundary.size()) - 1; }
    // highest degree with a well-defined Betti number
    int reported_top() const { return cap >= gdim ? cap : cap - 1; }
};

constexpr std::size_t kDefaultMemoryBudget = 2ull << 30;

ChainComplex build_ce(const LiePresentation& l, int degree_cap, std::size_t memory_budget = kDefaultMemoryBudget);

// d_{n-1} ∘ d_n = 0 on all basis vectors
bool d_squared_zero(const ChainComplex& c);

struct BettiReport {
    RankMethod method = RankMethod::modular;
    std::vector<std::uint64_t> primes;    // used by the modular method
    std::vector<long long> betti;         // degrees 0..reported_top
    std::vector<long long> primitives;    // p_1..p_reported_top
    std::vector<long long> ranks;         // rank d_n for built n (index 0 unused)
};

BettiReport betti(const ChainComplex& c, RankMethod method, std::uint64_t seed = 1);

// Exponents of the free graded-commutative algebra with the given Poincare
// series: prod_{d odd}(1+t^d)^{p_d} * prod_{d even}(1-t^d)^{-p_d}.
// betti[0] must be 1; throws NotFreeCommutative if no such p_d >= 0 exist.
std::vector<long long> primitive_dims(const std::vector<long long>& betti_series);

} // namespace jhom

#endif
