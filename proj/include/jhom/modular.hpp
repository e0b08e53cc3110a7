#ifndef JHOM_MODULAR_HPP
#define JHOM_MODULAR_HPP

#include <cstdint>
#include <random>

#include "jhom/linalg.hpp"

namespace jhom {

// Arithmetic modulo a word-sized prime.
struct Fp {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
};

// Thrown when a rational has a denominator divisible by the working prime;
// the caller retries with a fresh prime.
struct BadPrime {};

bool is_probable_prime(std::uint64_t n);

// Random prime in [2^61, 2^62).
std::uint64_t random_prime(std::mt19937_64& rng);

// Image of a rational mod p (num * den^{-1}); throws BadPrime if den ≡ 0.
std::uint64_t rat_mod(const Rat& q, const Fp& fp);

// Rank of a sparse matrix over F_p.
int rank_mod(const SparseCols& m, std::uint64_t p);

} // namespace jhom

#endif
