#include "jhom/shiftmap.hpp"

#include <random>

#include "jhom/errors.hpp"

namespace jhom {

JMat atom_to_jmat(const InvolutiveAlgebra& alg, const JAtom& a) {
    QVec c = alg.basis_vec(a.beta);
    return a.shift ? JMat::shift(alg, a.i, c) : JMat::E(alg, a.i, a.j, c);
}

namespace {

std::vector<std::pair<JAtom, Rat>> atoms_of(const JMat& m) {
    std::vector<std::pair<JAtom, Rat>> out;
    for (const auto& [ij, v] : m.fin())
        for (int b = 0; b < static_cast<int>(v.size()); ++b)
            if (!is_zero(v[b])) out.push_back({JAtom{false, ij.first, ij.second, b}, v[b]});
    for (const auto& [off, v] : m.shifts())
        for (int b = 0; b < static_cast<int>(v.size()); ++b)
            if (!is_zero(v[b])) out.push_back({JAtom{true, off, 0, b}, v[b]});
    return out;
}

void jchain_add(JTensorChain& c, std::vector<JAtom> key, const Rat& v) {
    if (is_zero(v)) return;
    auto [it, fresh] = c.terms.try_emplace(std::move(key), v);
    if (!fresh) {
        it->second += v;
        if (is_zero(it->second)) c.terms.erase(it);
    }
}

} // namespace

void jchain_add_tensor(JTensorChain& c, const std::vector<JMat>& factors, const Rat& coeff) {
    if (is_zero(coeff)) return;
    std::vector<std::pair<std::vector<JAtom>, Rat>> partial{{{}, coeff}};
    for (const auto& f : factors) {
        auto atoms = atoms_of(f);
        if (atoms.empty()) return; // zero factor kills the tensor
        std::vector<std::pair<std::vector<JAtom>, Rat>> next;
        next.reserve(partial.size() * atoms.size());
        for (const auto& [key, v] : partial)
            for (const auto& [a, av] : atoms) {
                std::vector<JAtom> nk = key;
                nk.push_back(a);
                next.push_back({std::move(nk), v * av});
            }
        partial = std::move(next);
    }
    for (auto& [key, v] : partial) jchain_add(c, std::move(key), v);
}

JTensorChain jchain_scaled(const JTensorChain& c, const Rat& s) {
    JTensorChain out;
    out.n = c.n;
    if (is_zero(s)) return out;
    for (const auto& [k, v] : c.terms) out.terms.emplace(k, v * s);
    return out;
}

JTensorChain phi_tilde(const InvolutiveAlgebra& alg, const TensorChain& c) {
    int p = c.n;
    int d = alg.dim();
    JTensorChain out;
    out.n = p + 1;
    JMat n_shift = JMat::right_shift(alg);
    for (const auto& [idx, v] : c.terms) {
        std::vector<int> t = tensor_tuple(idx, d, p);
        for (int l = 0; l <= p; ++l) {
            std::vector<JMat> factors;
            factors.reserve(p + 2);
            factors.push_back(JMat::shift(alg, 0, alg.basis_vec(t[0])));
            for (int i = 1; i <= l; ++i) factors.push_back(JMat::shift(alg, 0, alg.basis_vec(t[i])));
            factors.push_back(n_shift);
            for (int i = l + 1; i <= p; ++i) factors.push_back(JMat::shift(alg, 0, alg.basis_vec(t[i])));
            jchain_add_tensor(out, factors, (l % 2 == 0) ? v : -v);
        }
    }
    return out;
}

JTensorChain y_J(const InvolutiveAlgebra& alg, const JTensorChain& c) {
    int q = c.n;
    long long e = static_cast<long long>(q) * (q + 1) / 2;
    Rat sign = (e % 2 == 0) ? 1 : -1;
    JTensorChain out;
    out.n = q;
    for (const auto& [key, v] : c.terms) {
        std::vector<JMat> factors;
        factors.reserve(key.size());
        factors.push_back(atom_to_jmat(alg, key[0]).star());
        for (std::size_t i = key.size(); i-- > 1;) factors.push_back(atom_to_jmat(alg, key[i]).star());
        jchain_add_tensor(out, factors, v * sign);
    }
    return out;
}

JTensorChain jhochschild_b(const InvolutiveAlgebra& alg, const JTensorChain& c) {
    if (c.n < 1) throw InvalidParameter("boundary needs index >= 1");
    JTensorChain out;
    out.n = c.n - 1;
    for (const auto& [key, v] : c.terms) {
        for (int i = 0; i < c.n; ++i) {
            std::vector<JMat> factors;
            for (int j = 0; j < i; ++j) factors.push_back(atom_to_jmat(alg, key[j]));
            factors.push_back(atom_to_jmat(alg, key[i]).mul(atom_to_jmat(alg, key[i + 1])));
            for (int j = i + 2; j <= c.n; ++j) factors.push_back(atom_to_jmat(alg, key[j]));
            jchain_add_tensor(out, factors, (i % 2 == 0) ? v : -v);
        }
        std::vector<JMat> wrap;
        wrap.push_back(atom_to_jmat(alg, key[c.n]).mul(atom_to_jmat(alg, key[0])));
        for (int j = 1; j < c.n; ++j) wrap.push_back(atom_to_jmat(alg, key[j]));
        jchain_add_tensor(out, wrap, (c.n % 2 == 0) ? v : -v);
    }
    return out;
}

bool reflection_intertwine_check(const InvolutiveAlgebra& alg, int p, int samples, std::uint64_t seed,
                   int expected_sign) {
    std::mt19937_64 rng(seed);
    long long cd = 1;
    for (int i = 0; i <= p; ++i) cd *= alg.dim();
    std::uniform_int_distribution<long long> idx(0, cd - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int t = 0; t < samples; ++t) {
        TensorChain c;
        c.n = p;
        for (int e = 0; e < 4; ++e) chain_add(c, idx(rng), coeff(rng));
        JTensorChain lhs = y_J(alg, phi_tilde(alg, c));
        JTensorChain rhs = jchain_scaled(phi_tilde(alg, act_y(alg, c, false)), expected_sign);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace jhom
