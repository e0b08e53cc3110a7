#include "jhom/dihedral.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jhom/errors.hpp"

namespace jhom {

long long tensor_index(const std::vector<int>& tuple, int d) {
    long long idx = 0;
    for (int t : tuple) idx = idx * d + t;
    return idx;
}

std::vector<int> tensor_tuple(long long idx, int d, int n) {
    std::vector<int> t(n + 1);
    for (int i = n; i >= 0; --i) {
        t[i] = static_cast<int>(idx % d);
        idx /= d;
    }
    return t;
}

void chain_add(TensorChain& c, long long idx, const Rat& v) {
    if (is_zero(v)) return;
    auto [it, fresh] = c.terms.try_emplace(idx, v);
    if (!fresh) {
        it->second += v;
        if (is_zero(it->second)) c.terms.erase(it);
    }
}

TensorChain elementary_tensor(int n, const std::vector<int>& tuple, int d) {
    TensorChain c;
    c.n = n;
    c.terms[tensor_index(tuple, d)] = 1;
    return c;
}

namespace {

// applies bar factorwise; each factor expands through the involution matrix
TensorChain bar_expand(const InvolutiveAlgebra& alg, const TensorChain& c) {
    int d = alg.dim();
    TensorChain out;
    out.n = c.n;
    for (const auto& [idx, v] : c.terms) {
        std::vector<int> t = tensor_tuple(idx, d, c.n);
        std::vector<std::pair<long long, Rat>> partial{{0, v}};
        for (int pos = 0; pos <= c.n; ++pos) {
            QVec img = alg.bar(alg.basis_vec(t[pos]));
            std::vector<std::pair<long long, Rat>> next;
            for (const auto& [pidx, pv] : partial)
                for (int b = 0; b < d; ++b)
                    if (!is_zero(img[b])) next.emplace_back(pidx * d + b, pv * img[b]);
            partial = std::move(next);
        }
        for (const auto& [fidx, fv] : partial) chain_add(out, fidx, fv);
    }
    return out;
}

} // namespace

TensorChain act_x(const InvolutiveAlgebra& alg, const TensorChain& c) {
    int d = alg.dim();
    TensorChain out;
    out.n = c.n;
    int sign = (c.n % 2 == 0) ? 1 : -1;
    for (const auto& [idx, v] : c.terms) {
        std::vector<int> t = tensor_tuple(idx, d, c.n);
        std::rotate(t.rbegin(), t.rbegin() + 1, t.rend());
        chain_add(out, tensor_index(t, d), v * sign);
    }
    return out;
}

TensorChain act_y(const InvolutiveAlgebra& alg, const TensorChain& c, bool skew) {
    int d = alg.dim();
    TensorChain rev;
    rev.n = c.n;
    long long e = static_cast<long long>(c.n) * (c.n + 1) / 2;
    int sign = (e % 2 == 0) ? 1 : -1;
    if (skew) sign = -sign;
    for (const auto& [idx, v] : c.terms) {
        std::vector<int> t = tensor_tuple(idx, d, c.n);
        std::reverse(t.begin() + 1, t.end());
        chain_add(rev, tensor_index(t, d), v * sign);
    }
    return bar_expand(alg, rev);
}

TensorChain hochschild_b(const InvolutiveAlgebra& alg, const TensorChain& c) {
    if (c.n < 1) throw InvalidParameter("boundary needs index >= 1");
    int d = alg.dim();
    TensorChain out;
    out.n = c.n - 1;
    for (const auto& [idx, v] : c.terms) {
        std::vector<int> t = tensor_tuple(idx, d, c.n);
        for (int i = 0; i < c.n; ++i) {
            QVec prod = alg.mul(alg.basis_vec(t[i]), alg.basis_vec(t[i + 1]));
            int sign = (i % 2 == 0) ? 1 : -1;
            for (int b = 0; b < d; ++b) {
                if (is_zero(prod[b])) continue;
                std::vector<int> s;
                s.reserve(c.n);
                for (int j = 0; j < i; ++j) s.push_back(t[j]);
                s.push_back(b);
                for (int j = i + 2; j <= c.n; ++j) s.push_back(t[j]);
                chain_add(out, tensor_index(s, d), v * sign * prod[b]);
            }
        }
        // wrap-around term r_n r_0
        QVec prod = alg.mul(alg.basis_vec(t[c.n]), alg.basis_vec(t[0]));
        int sign = (c.n % 2 == 0) ? 1 : -1;
        for (int b = 0; b < d; ++b) {
            if (is_zero(prod[b])) continue;
            std::vector<int> s;
            s.reserve(c.n);
            s.push_back(b);
            for (int j = 1; j < c.n; ++j) s.push_back(t[j]);
            chain_add(out, tensor_index(s, d), v * sign * prod[b]);
        }
    }
    return out;
}

DihedralVariant parse_variant(const std::string& s) {
    if (s == "dihedral" || s == "plus") return DihedralVariant::dihedral;
    if (s == "skew" || s == "minus") return DihedralVariant::skew;
    if (s == "cyclic") return DihedralVariant::cyclic;
    if (s == "none" || s == "hochschild") return DihedralVariant::none;
    throw InvalidParameter("unknown variant: " + s);
}

std::string variant_name(DihedralVariant v) {
    switch (v) {
        case DihedralVariant::dihedral: return "dihedral";
        case DihedralVariant::skew: return "skew";
        case DihedralVariant::cyclic: return "cyclic";
        case DihedralVariant::none: return "none";
    }
    return "?";
}

TensorChain CoinvariantSpace::project(const TensorChain& c) const {
    const InvolutiveAlgebra& R = *alg_;
    bool with_y = variant == DihedralVariant::dihedral || variant == DihedralVariant::skew;
    bool skew = variant == DihedralVariant::skew;
    int rots = (variant == DihedralVariant::none) ? 1 : n + 1;
    TensorChain acc;
    acc.n = c.n;
    TensorChain cur = c;
    TensorChain cury = with_y ? act_y(R, c, skew) : TensorChain{};
    int count = 0;
    for (int k = 0; k < rots; ++k) {
        for (const auto& [idx, v] : cur.terms) chain_add(acc, idx, v);
        ++count;
        if (with_y) {
            for (const auto& [idx, v] : cury.terms) chain_add(acc, idx, v);
            ++count;
        }
        if (k + 1 < rots) {
            cur = act_x(R, cur);
            if (with_y) cury = act_x(R, cury);
        }
    }
    TensorChain out;
    out.n = c.n;
    Rat inv(1, count);
    for (const auto& [idx, v] : acc.terms) {
        Rat w = v * inv;
        if (!is_zero(w)) out.terms[idx] = w;
    }
    return out;
}

QVec CoinvariantSpace::coords(const TensorChain& c) const {
    SVec v;
    for (const auto& [idx, x] : c.terms) v.emplace_back(static_cast<int>(idx), x);
    return span_.coords(v);
}

TensorChain CoinvariantSpace::basis_chain(int i) const {
    TensorChain c;
    c.n = n;
    for (const auto& [idx, v] : span_.rows()[i]) c.terms[idx] = v;
    return c;
}

CoinvariantSpace build_coinvariants(const InvolutiveAlgebra& alg, int n, DihedralVariant v, long long budget) {
    if (n < 0) throw InvalidParameter("index must be >= 0");
    int d = alg.dim();
    long long cd = 1;
    for (int i = 0; i <= n; ++i) {
        cd *= d;
        if (cd > budget) throw BudgetExceeded("tensor space too large at index " + std::to_string(n));
    }
    CoinvariantSpace s;
    s.n = n;
    s.variant = v;
    s.alg_ = &alg;
    s.chain_dim_ = cd;
    for (long long idx = 0; idx < cd; ++idx) {
        TensorChain e;
        e.n = n;
        e.terms[idx] = 1;
        TensorChain p = s.project(e);
        SVec row;
        for (const auto& [i, x] : p.terms) row.emplace_back(static_cast<int>(i), x);
        s.span_.insert(std::move(row));
    }
    return s;
}

QMat induced_boundary(const CoinvariantSpace& top, const CoinvariantSpace& bottom) {
    if (top.n != bottom.n + 1 || top.variant != bottom.variant)
        throw InvalidParameter("boundary needs consecutive spaces of the same variant");
    QMat m(bottom.dim(), top.dim());
    for (int j = 0; j < top.dim(); ++j) {
        TensorChain b = hochschild_b(top.alg(), top.basis_chain(j));
        QVec col = bottom.coords(bottom.project(b));
        for (int i = 0; i < bottom.dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

namespace {

int qmat_rank(QMat m) { return static_cast<int>(m.rref().size()); }

} // namespace

std::vector<DihedralHomology> homology_range(const InvolutiveAlgebra& alg, int max_n, DihedralVariant v,
                                             long long budget) {
    if (max_n < 0) throw InvalidParameter("max_n must be >= 0");
    std::vector<CoinvariantSpace> spaces;
    for (int n = 0; n <= max_n + 1; ++n) spaces.push_back(build_coinvariants(alg, n, v, budget));
    std::vector<int> ranks(max_n + 2, 0); // ranks[n] = rank of the boundary out of index n
    for (int n = 1; n <= max_n + 1; ++n) ranks[n] = qmat_rank(induced_boundary(spaces[n], spaces[n - 1]));
    std::vector<DihedralHomology> out;
    for (int n = 0; n <= max_n; ++n) {
        DihedralHomology h;
        h.n = n;
        h.variant = v;
        h.dim_chain = spaces[n].chain_dim();
        h.dim_coinv = spaces[n].dim();
        h.betti = spaces[n].dim() - ranks[n] - ranks[n + 1];
        out.push_back(h);
    }
    return out;
}

DihedralHomology homology(const InvolutiveAlgebra& alg, int n, DihedralVariant v, long long budget) {
    CoinvariantSpace cn = build_coinvariants(alg, n, v, budget);
    CoinvariantSpace up = build_coinvariants(alg, n + 1, v, budget);
    int rank_out = 0;
    if (n >= 1) {
        CoinvariantSpace down = build_coinvariants(alg, n - 1, v, budget);
        rank_out = qmat_rank(induced_boundary(cn, down));
    }
    int rank_in = qmat_rank(induced_boundary(up, cn));
    DihedralHomology h;
    h.n = n;
    h.variant = v;
    h.dim_chain = cn.chain_dim();
    h.dim_coinv = cn.dim();
    h.betti = cn.dim() - rank_out - rank_in;
    return h;
}

EigenSplit cyclic_y_split(const InvolutiveAlgebra& alg, int n, long long budget) {
    CoinvariantSpace cn = build_coinvariants(alg, n, DihedralVariant::cyclic, budget);
    CoinvariantSpace up = build_coinvariants(alg, n + 1, DihedralVariant::cyclic, budget);
    int dim = cn.dim();

    // kernel of the outgoing boundary inside im(P)
    std::vector<QVec> kernel;
    if (n == 0) {
        for (int i = 0; i < dim; ++i) {
            QVec e = zero_vec(dim);
            e[i] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        CoinvariantSpace down = build_coinvariants(alg, n - 1, DihedralVariant::cyclic, budget);
        kernel = nullspace(induced_boundary(cn, down)).basis;
    }

    // boundaries from one degree up, then homology class representatives
    QMat bin = induced_boundary(up, cn);
    RowSpace quot;
    for (int j = 0; j < up.dim(); ++j) {
        QVec col = zero_vec(dim);
        for (int i = 0; i < dim; ++i) col[i] = bin.at(i, j);
        quot.insert(svec_from_dense(col));
    }
    int boundary_dim = quot.dim();
    std::vector<int> rep_rows;
    for (const auto& kv : kernel)
        if (quot.insert(svec_from_dense(kv))) rep_rows.push_back(quot.dim() - 1);
    int m = static_cast<int>(rep_rows.size());
    if (m + boundary_dim != quot.dim()) throw InternalMismatch("homology representative bookkeeping broke");

    // matrix of the involution induced by y on the homology classes
    auto lift = [&](int row) {
        TensorChain c;
        c.n = n;
        QVec dense = svec_to_dense(quot.rows()[row], dim);
        for (int i = 0; i < dim; ++i) {
            if (is_zero(dense[i])) continue;
            TensorChain bi = cn.basis_chain(i);
            for (const auto& [idx, v] : bi.terms) chain_add(c, idx, v * dense[i]);
        }
        return c;
    };
    QMat y(m, m);
    for (int j = 0; j < m; ++j) {
        TensorChain img = act_y(alg, lift(rep_rows[j]), false);
        QVec coords = cn.coords(img); // y preserves the cyclic coinvariants
        QVec full = quot.coords(svec_from_dense(coords));
        for (int i = 0; i < m; ++i) y.at(i, j) = full[rep_rows[i]];
    }
    if (!y.mul(y).sub(QMat::identity(m)).is_zero_mat())
        throw InternalMismatch("induced involution does not square to the identity");

    QMat ym = y.sub(QMat::identity(m));
    QMat yp = y;
    for (int i = 0; i < m; ++i) yp.at(i, i) += 1;
    EigenSplit s;
    s.total = m;
    s.plus = m - qmat_rank(ym);
    s.minus = m - qmat_rank(yp);
    if (s.plus + s.minus != m) throw InternalMismatch("eigen split does not fill the homology");
    return s;
}

bool eigen_split_check(const InvolutiveAlgebra& alg, int n, long long budget) {
    EigenSplit s = cyclic_y_split(alg, n, budget);
    long long hd = homology(alg, n, DihedralVariant::dihedral, budget).betti;
    long long skew = homology(alg, n, DihedralVariant::skew, budget).betti;
    return hd == s.plus && skew == s.minus && hd + skew == s.total;
}

namespace {

using Perm = std::vector<int>;

Perm pid(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
}
Perm pmul(const Perm& a, const Perm& b) { // (a*b)(i) = a(b(i))
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}
Perm pinv(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

// points 0..n-1 plain, n..2n-1 starred
bool star_equivariant(const Perm& h, int n) {
    for (int i = 0; i < n; ++i)
        if (h[i + n] != (h[i] + n) % (2 * n)) return false;
    return true;
}

} // namespace

StabilizerReport hyperoctahedral_stabilizer(int n) {
    if (n < 2 || n > 6) throw InvalidParameter("stabilizer check supports 2 <= n <= 6");
    int m = 2 * n;
    StabilizerReport rep;
    rep.n = n;

    Perm kappa = pid(m);
    for (int i = 0; i < n; ++i) kappa[i] = (i + 1) % n;
    Perm kappa_inv = pinv(kappa);

    // enumerate H_n = signed permutations
    std::vector<Perm> group;
    Perm sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            Perm h(m);
            for (int i = 0; i < n; ++i) {
                int img = sigma[i] + ((mask >> i) & 1 ? n : 0);
                h[i] = img;
                h[i + n] = (img + n) % m;
            }
            group.push_back(std::move(h));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    rep.group_order = static_cast<long long>(group.size());

    std::set<Perm> stab;
    for (const auto& h : group)
        if (star_equivariant(pmul(kappa_inv, pmul(h, kappa)), n)) stab.insert(h);
    rep.stab_order = static_cast<int>(stab.size());

    // quoted generators: the simultaneous cycle and the reversal with a
    // global star swap
    Perm x(m);
    for (int i = 0; i < n; ++i) {
        x[i] = (i + 1) % n;
        x[i + n] = (i + 1) % n + n;
    }
    Perm y(m);
    for (int i = 0; i < n; ++i) {
        y[i] = (n - 1 - i) + n; // eta after omega
        y[i + n] = n - 1 - i;
    }
    rep.quoted_generators_inside = stab.count(x) > 0 && stab.count(y) > 0;

    std::set<Perm> gen{pid(m)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> cur(gen.begin(), gen.end());
        for (const auto& g : cur)
            for (const auto* s : {&x, &y})
                if (gen.insert(pmul(g, *s)).second) grew = true;
    }
    rep.quoted_generators_generate = rep.quoted_generators_inside && gen == stab;

    // dihedral relations for the quoted generators
    Perm xp = pid(m);
    int ordx = 0;
    do {
        xp = pmul(xp, x);
        ++ordx;
    } while (xp != pid(m) && ordx <= m + 1);
    bool rel = ordx == n && pmul(y, y) == pid(m) && pmul(y, pmul(x, y)) == pinv(x);
    rep.dihedral_relations = rel && rep.stab_order == 2 * n;
    return rep;
}

bool induced_action_check(const InvolutiveAlgebra& alg, int n) {
    if (n < 1) throw InvalidParameter("tensor length must be >= 1");
    int d = alg.dim();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= d;
        if (total > kDefaultChainBudget) throw BudgetExceeded("tensor space too large");
    }
    int idx = n - 1; // chain index of an n-factor tensor
    long long xe = n - 1;
    long long ye = static_cast<long long>(n + 1) * (n + 2) / 2;
    int xsign = (xe % 2 == 0) ? 1 : -1;
    int ysign = (ye % 2 == 0) ? 1 : -1;
    for (long long f = 0; f < total; ++f) {
        std::vector<int> t = tensor_tuple(f, d, idx);
        TensorChain e = elementary_tensor(idx, t, d);

        // rotation: (-1)^{n-1} (a_n x a_1 x ... x a_{n-1})
        std::vector<int> rot = t;
        std::rotate(rot.rbegin(), rot.rbegin() + 1, rot.rend());
        TensorChain expect_x = elementary_tensor(idx, rot, d);
        for (auto& [k, v] : expect_x.terms) v *= xsign;
        if (!(act_x(alg, e) == expect_x)) return false;

        // reflection: (-1)^{(n+1)(n+2)/2} (a_1^* x a_n^* x ... x a_2^*)
        std::vector<int> rev = t;
        std::reverse(rev.begin() + 1, rev.end());
        TensorChain raw = elementary_tensor(idx, rev, d);
        for (auto& [k, v] : raw.terms) v *= ysign;
        TensorChain expect_y = bar_expand(alg, raw);
        if (!(act_y(alg, e, true) == expect_y)) return false;
    }
    return true;
}

} // namespace jhom
