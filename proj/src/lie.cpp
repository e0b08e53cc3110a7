#include "jhom/lie.hpp"

#include <algorithm>
#include <ostream>

#include "jhom/errors.hpp"

namespace jhom {

LieFamily parse_family(const std::string& s) {
    if (s == "gl") return LieFamily::gl;
    if (s == "o_odd") return LieFamily::o_odd;
    if (s == "sp") return LieFamily::sp;
    if (s == "o_even") return LieFamily::o_even;
    throw InvalidParameter("unknown family: " + s);
}

std::string family_name(LieFamily f) {
    switch (f) {
        case LieFamily::gl: return "gl";
        case LieFamily::o_odd: return "o_odd";
        case LieFamily::sp: return "sp";
        case LieFamily::o_even: return "o_even";
    }
    return "?";
}

std::vector<long> family_window(LieFamily f, int n) {
    if (n < 1) throw InvalidParameter("window parameter must be >= 1");
    std::vector<long> w;
    switch (f) {
        case LieFamily::o_odd:
            for (long i = -n; i <= n; ++i) w.push_back(i);
            break;
        case LieFamily::sp:
        case LieFamily::o_even:
            for (long i = -n; i < n; ++i) w.push_back(i);
            break;
        case LieFamily::gl:
            // total size n, balanced representatives
            if (n % 2 == 1) {
                for (long i = -(n / 2); i <= n / 2; ++i) w.push_back(i);
            } else {
                for (long i = -(n / 2); i < n / 2; ++i) w.push_back(i);
            }
            break;
    }
    return w;
}

namespace {

// bilinear-form kernel of the defining relation t(X) J + J X = 0
QMat family_j_matrix(LieFamily f, const std::vector<long>& window) {
    int w = static_cast<int>(window.size());
    QMat j(w, w);
    for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b) {
            long i = window[a], jj = window[b];
            switch (f) {
                case LieFamily::o_odd:
                    if (jj == -i) j.at(a, b) = 1;
                    break;
                case LieFamily::sp:
                    if (jj == -i - 1) j.at(a, b) = (i % 2 == 0) ? 1 : -1;
                    break;
                case LieFamily::o_even:
                    if (jj == -i - 1) j.at(a, b) = 1;
                    break;
                case LieFamily::gl: break;
            }
        }
    return j;
}

} // namespace

QVec LiePresentation::basis_entry(int b, int r, int c) const {
    int w = window_size(), d = alg->dim();
    QVec eigen(d);
    for (int k = 0; k < d; ++k) eigen[k] = null_.basis[b][(static_cast<std::size_t>(r) * w + c) * d + k];
    return mat_apply(eigen_to_std_, eigen);
}

QVec LiePresentation::member_coords(const QVec& var_vec) const { return null_.coords(var_vec); }

QVec LiePresentation::var_of_entry(int r, int c, const QVec& a) const {
    int w = window_size(), d = alg->dim();
    QVec v = zero_vec(var_dim());
    QVec eigen = mat_apply(std_to_eigen_, a);
    for (int k = 0; k < d; ++k) v[(static_cast<std::size_t>(r) * w + c) * d + k] = eigen[k];
    return v;
}

QVec LiePresentation::bracket_var(const QVec& x, const QVec& y) const {
    int w = window_size(), d = alg->dim();
    auto entry_std = [&](const QVec& v, int r, int c) {
        QVec eigen(d);
        for (int k = 0; k < d; ++k) eigen[k] = v[(static_cast<std::size_t>(r) * w + c) * d + k];
        return mat_apply(eigen_to_std_, eigen);
    };
    QVec out = zero_vec(var_dim());
    for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) {
            QVec acc = zero_vec(d);
            for (int m = 0; m < w; ++m) {
                QVec xy = alg->mul(entry_std(x, r, m), entry_std(y, m, c));
                QVec yx = alg->mul(entry_std(y, r, m), entry_std(x, m, c));
                vec_add(acc, xy);
                vec_sub(acc, yx);
            }
            QVec eigen = mat_apply(std_to_eigen_, acc);
            for (int k = 0; k < d; ++k) out[(static_cast<std::size_t>(r) * w + c) * d + k] = eigen[k];
        }
    return out;
}

LiePresentation build_lie(LieFamily f, int n, std::shared_ptr<const InvolutiveAlgebra> alg) {
    if (n < 1) throw InvalidParameter("n must be >= 1");
    LiePresentation l;
    l.family = f;
    l.n = n;
    l.alg = std::move(alg);
    l.window = family_window(f, n);
    const InvolutiveAlgebra& R = *l.alg;
    int w = l.window_size(), d = R.dim();

    // coefficient basis: R_1 vectors before R_{-1} vectors
    for (const auto& v : R.plus_basis()) l.eigen_basis_.push_back(v);
    for (const auto& v : R.minus_basis()) l.eigen_basis_.push_back(v);
    if (static_cast<int>(l.eigen_basis_.size()) != d)
        throw InternalMismatch("eigen split does not span the coefficient algebra");
    l.eigen_to_std_ = QMat(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) l.eigen_to_std_.at(i, j) = l.eigen_basis_[j][i];
    // invert by reducing [E | I]
    {
        QMat aug(d, 2 * d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) aug.at(i, j) = l.eigen_to_std_.at(i, j);
            aug.at(i, d + i) = 1;
        }
        aug.rref();
        l.std_to_eigen_ = QMat(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) l.std_to_eigen_.at(i, j) = aug.at(i, d + j);
    }

    int vd = l.var_dim();
    QMat eqs(0, vd);
    if (f != LieFamily::gl) {
        QMat jm = family_j_matrix(f, l.window);
        // one equation block per window position (p,q): t(X)J + JX vanishes
        eqs = QMat(vd, vd);
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j)
                for (int beta = 0; beta < d; ++beta) {
                    int var = (i * w + j) * d + beta;
                    const QVec& eb = l.eigen_basis_[beta];
                    QVec ebbar = R.bar(eb);
                    // first term hits conditions (p=j, q): coefficient J(i,q)
                    for (int q = 0; q < w; ++q) {
                        const Rat& c = jm.at(i, q);
                        if (is_zero(c)) continue;
                        for (int rho = 0; rho < d; ++rho)
                            if (!is_zero(ebbar[rho])) eqs.at((j * w + q) * d + rho, var) += c * ebbar[rho];
                    }
                    // second term hits conditions (p, q=j): coefficient J(p,i)
                    for (int p = 0; p < w; ++p) {
                        const Rat& c = jm.at(p, i);
                        if (is_zero(c)) continue;
                        for (int rho = 0; rho < d; ++rho)
                            if (!is_zero(eb[rho])) eqs.at((p * w + j) * d + rho, var) += c * eb[rho];
                    }
                }
    }
    l.null_ = nullspace(std::move(eqs));

    int dim = l.dim();
    l.sc_.assign(static_cast<std::size_t>(dim) * dim, SVec{});
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            QVec br = l.bracket_var(l.null_.basis[i], l.null_.basis[j]);
            QVec coords = l.null_.coords(br); // throws if bracket leaves the algebra
            SVec sc = svec_from_dense(coords);
            l.sc_[static_cast<std::size_t>(i) * dim + j] = sc;
            for (auto& [k, v] : sc) v = -v;
            l.sc_[static_cast<std::size_t>(j) * dim + i] = std::move(sc);
        }
    return l;
}

namespace {

bool jacobi_holds(int dim, const std::vector<SVec>& sc) {
    auto c = [&](int i, int j) -> const SVec& { return sc[static_cast<std::size_t>(i) * dim + j]; };
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                QVec acc = zero_vec(dim);
                for (const auto& [m, v] : c(j, k))
                    for (const auto& [t, u] : c(i, m)) acc[t] += v * u;
                for (const auto& [m, v] : c(k, i))
                    for (const auto& [t, u] : c(j, m)) acc[t] += v * u;
                for (const auto& [m, v] : c(i, j))
                    for (const auto& [t, u] : c(k, m)) acc[t] += v * u;
                if (!vec_is_zero(acc)) return false;
            }
    return true;
}

} // namespace

bool jacobi_audit(const LiePresentation& l) {
    int dim = l.dim();
    std::vector<SVec> sc;
    sc.reserve(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) sc.push_back(l.bracket_coords(i, j));
    return jacobi_holds(dim, sc);
}

bool jacobi_audit_perturbed(const LiePresentation& l, int i, int j, int k, const Rat& delta) {
    int dim = l.dim();
    std::vector<SVec> sc;
    sc.reserve(static_cast<std::size_t>(dim) * dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) sc.push_back(l.bracket_coords(a, b));
    QVec row = svec_to_dense(sc[static_cast<std::size_t>(i) * dim + j], dim);
    row[k] += delta;
    sc[static_cast<std::size_t>(i) * dim + j] = svec_from_dense(row);
    return jacobi_holds(dim, sc);
}

InclusionMap include_lie(const LiePresentation& small, const LiePresentation& large) {
    if (small.family != large.family || small.alg->name() != large.alg->name() || large.n != small.n + 1)
        throw FamilyMismatch("inclusion requires the same family and coefficient algebra at consecutive sizes");
    InclusionMap m;
    int sd = small.dim(), ld = large.dim();
    int sw = small.window_size();
    // position of each small window label in the large window
    std::vector<int> pos(sw);
    for (int a = 0; a < sw; ++a) {
        auto it = std::find(large.window.begin(), large.window.end(), small.window[a]);
        if (it == large.window.end()) throw FamilyMismatch("window labels do not embed");
        pos[a] = static_cast<int>(it - large.window.begin());
    }
    for (int b = 0; b < sd; ++b) {
        QVec var = zero_vec(large.var_dim());
        for (int r = 0; r < sw; ++r)
            for (int c = 0; c < sw; ++c) {
                QVec a = small.basis_entry(b, r, c);
                if (vec_is_zero(a)) continue;
                vec_add(var, large.var_of_entry(pos[r], pos[c], a));
            }
        m.images.push_back(large.member_coords(var));
    }
    // [img(x), img(y)] must match img([x, y]) for all basis pairs
    auto bracket_large = [&](const QVec& u, const QVec& v) {
        QVec acc = zero_vec(ld);
        for (int a = 0; a < ld; ++a) {
            if (is_zero(u[a])) continue;
            for (int bb = 0; bb < ld; ++bb) {
                if (is_zero(v[bb])) continue;
                Rat c = u[a] * v[bb];
                for (const auto& [t, s] : large.bracket_coords(a, bb)) acc[t] += c * s;
            }
        }
        return acc;
    };
    m.bracket_compatible = true;
    for (int i = 0; i < sd && m.bracket_compatible; ++i)
        for (int j = 0; j < sd; ++j) {
            QVec lhs = bracket_large(m.images[i], m.images[j]);
            QVec rhs = zero_vec(ld);
            for (const auto& [t, s] : small.bracket_coords(i, j)) vec_axpy(rhs, s, m.images[t]);
            if (lhs != rhs) {
                m.bracket_compatible = false;
                break;
            }
        }
    return m;
}

void export_structure_constants(const LiePresentation& l, std::ostream& out) {
    out << "# family " << family_name(l.family) << " n " << l.n << " R " << l.alg->name() << " dim " << l.dim()
        << "\n";
    int dim = l.dim();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, v] : l.bracket_coords(i, j)) out << i << " " << j << " " << k << " " << rat_str(v) << "\n";
}

} // namespace jhom
