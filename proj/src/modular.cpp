#include "jhom/modular.hpp"

#include <vector>

namespace jhom {

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    Fp fp{n};
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin bases for 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = fp.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = fp.mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1ull << 61, (1ull << 62) - 1);
    for (;;) {
        std::uint64_t n = dist(rng) | 1;
        if (is_probable_prime(n)) return n;
    }
}

std::uint64_t rat_mod(const Rat& q, const Fp& fp) {
    mpz_class pz(static_cast<unsigned long>(fp.p));
    mpz_class nm = q.get_num() % pz;
    if (nm < 0) nm += pz;
    mpz_class dm = q.get_den() % pz;
    std::uint64_t n64 = nm.get_ui();
    std::uint64_t d64 = dm.get_ui();
    if (d64 == 0) throw BadPrime{};
    return fp.mul(n64, fp.inv(d64));
}

int rank_mod(const SparseCols& m, std::uint64_t p) {
    Fp fp{p};
    int n = m.nrows;
    // dense rows over F_p; each column of m becomes a row of the transpose
    std::vector<std::vector<std::uint64_t>> pivot_rows; // normalized, lead = 1
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_at(n, -1);
    std::vector<std::uint64_t> v(n);
    int rank = 0;
    for (const auto& col : m.cols) {
        std::fill(v.begin(), v.end(), 0);
        for (const auto& [i, q] : col) v[i] = rat_mod(q, fp);
        int lead = 0;
        while (lead < n) {
            if (v[lead] == 0) {
                ++lead;
                continue;
            }
            int pr = pivot_row_at[lead];
            if (pr < 0) break;
            std::uint64_t c = fp.neg(v[lead]);
            const auto& row = pivot_rows[pr];
            for (int j = lead; j < n; ++j)
                if (row[j]) v[j] = fp.add(v[j], fp.mul(c, row[j]));
            v[lead] = 0;
        }
        if (lead >= n) continue;
        std::uint64_t inv = fp.inv(v[lead]);
        std::vector<std::uint64_t> row(n, 0);
        for (int j = lead; j < n; ++j) row[j] = fp.mul(v[j], inv);
        pivot_row_at[lead] = static_cast<int>(pivot_rows.size());
        pivot_rows.push_back(std::move(row));
        pivot_col_of_row.push_back(lead);
        ++rank;
    }
    return rank;
}

} // namespace jhom
