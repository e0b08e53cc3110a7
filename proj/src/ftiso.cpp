#include "jhom/ftiso.hpp"

#include <random>

#include "jhom/errors.hpp"

namespace jhom {

void BlockMatrix::add_block(long m, long n, const JMat& j) {
    if (j.is_zero()) return;
    auto key = std::make_pair(m, n);
    auto it = blocks_.find(key);
    if (it == blocks_.end()) {
        blocks_.emplace(key, j);
    } else {
        it->second = it->second.add(j);
        if (it->second.is_zero()) blocks_.erase(it);
    }
}

JMat BlockMatrix::block(long m, long n) const {
    auto it = blocks_.find(std::make_pair(m, n));
    return it == blocks_.end() ? JMat(*alg_) : it->second;
}

BlockMatrix BlockMatrix::mul(const BlockMatrix& o) const {
    BlockMatrix r(*alg_, window_);
    for (const auto& [mn, a] : blocks_)
        for (const auto& [pq, b] : o.blocks_)
            if (mn.second == pq.first) r.add_block(mn.first, pq.second, a.mul(b));
    return r;
}

BlockMatrix BlockMatrix::sub(const BlockMatrix& o) const {
    BlockMatrix r = *this;
    for (const auto& [mn, b] : o.blocks_) r.add_block(mn.first, mn.second, b.neg());
    return r;
}

BlockMatrix BlockMatrix::bracket(const BlockMatrix& o) const { return mul(o).sub(o.mul(*this)); }

bool BlockMatrix::operator==(const BlockMatrix& o) const {
    if (blocks_.size() != o.blocks_.size()) return false;
    for (auto ia = blocks_.begin(), ib = o.blocks_.begin(); ia != blocks_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

std::pair<long, long> window_decompose(const std::vector<long>& window, long a) {
    long L = static_cast<long>(window.size());
    for (long m : window) {
        long diff = a - m;
        if (diff % L == 0) return {m, diff / L};
    }
    throw InternalMismatch("window is not a complete residue system");
}

BlockMatrix phi(const InvolutiveAlgebra& alg, const std::vector<long>& window, const JMat& x) {
    if (x.has_shift_part()) throw ShiftPartPresent("block decomposition needs finite support");
    BlockMatrix b(alg, window);
    for (const auto& [ij, c] : x.fin()) {
        auto [m, r] = window_decompose(window, ij.first);
        auto [n, s] = window_decompose(window, ij.second);
        b.add_block(m, n, JMat::E(alg, r, s, c));
    }
    return b;
}

JMat phi_inverse(const BlockMatrix& b) {
    long L = static_cast<long>(b.window().size());
    JMat x(b.alg());
    for (const auto& [mn, blk] : b.blocks()) {
        if (blk.has_shift_part()) throw ShiftPartPresent("block entries must have finite support");
        for (const auto& [rs, c] : blk.fin()) x.add_entry(mn.first + rs.first * L, mn.second + rs.second * L, c);
    }
    return x;
}

namespace {

QVec random_elem(const InvolutiveAlgebra& alg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    QVec v = zero_vec(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) v[i] = coeff(rng);
    return v;
}

JMat random_banded(const InvolutiveAlgebra& alg, std::mt19937_64& rng, long span, int entries) {
    std::uniform_int_distribution<long> idx(-span, span);
    JMat m(alg);
    for (int e = 0; e < entries; ++e) m.add_entry(idx(rng), idx(rng), random_elem(alg, rng));
    return m;
}

// the finite bilinear-form coefficients of the family over its window
Rat window_form(LieFamily f, long p, long q) {
    switch (f) {
        case LieFamily::o_odd: return q == -p ? Rat(1) : Rat(0);
        case LieFamily::sp:
            if (q != -p - 1) return 0;
            return ((p % 2 + 2) % 2 == 0) ? Rat(1) : Rat(-1);
        case LieFamily::o_even: return q == -p - 1 ? Rat(1) : Rat(0);
        case LieFamily::gl: return 0;
    }
    return 0;
}

TauFlavor family_flavor(LieFamily f) {
    switch (f) {
        case LieFamily::o_odd: return TauFlavor::tau_B;
        case LieFamily::sp: return TauFlavor::tau_C;
        case LieFamily::o_even: return TauFlavor::tau_D;
        case LieFamily::gl: break;
    }
    throw InvalidParameter("no anti-involution attached to this family");
}

} // namespace

bool restriction_check(const InvolutiveAlgebra& alg, LieFamily family, int n, int samples,
                       std::uint64_t seed) {
    TauFlavor flavor = family_flavor(family);
    std::vector<long> window = family_window(family, n);
    std::mt19937_64 rng(seed);
    long span = 3 * static_cast<long>(window.size());
    for (int t = 0; t < samples; ++t) {
        JMat g = random_banded(alg, rng, span, 3).fixed_point_project(flavor);
        BlockMatrix b = phi(alg, window, g);
        // t(B) J + J B = 0, block transpose entries conjugated by star
        for (long p : window)
            for (long q : window) {
                JMat acc(alg);
                for (long r : window) {
                    Rat jrq = window_form(family, r, q);
                    if (!is_zero(jrq)) acc = acc.add(b.block(r, p).star().scaled(jrq));
                    Rat jpr = window_form(family, p, r);
                    if (!is_zero(jpr)) acc = acc.add(b.block(r, q).scaled(jpr));
                }
                if (!acc.is_zero()) return false;
            }
    }
    return true;
}

bool bracket_preservation(const InvolutiveAlgebra& alg, const std::vector<long>& window, int samples,
                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long span = 3 * static_cast<long>(window.size());
    for (int t = 0; t < samples; ++t) {
        JMat x = random_banded(alg, rng, span, 3);
        JMat y = random_banded(alg, rng, span, 3);
        BlockMatrix lhs = phi(alg, window, x.bracket(y));
        BlockMatrix rhs = phi(alg, window, x).bracket(phi(alg, window, y));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace jhom
