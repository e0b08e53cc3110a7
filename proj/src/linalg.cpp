#include "jhom/linalg.hpp"

#include <algorithm>

#include "jhom/errors.hpp"

namespace jhom {

SVec svec_from_dense(const QVec& v) {
    SVec r;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!is_zero(v[i])) r.emplace_back(i, v[i]);
    return r;
}

QVec svec_to_dense(const SVec& v, int n) {
    QVec r = zero_vec(n);
    for (const auto& [i, x] : v) r[i] = x;
    return r;
}

void svec_axpy(SVec& a, const Rat& c, const SVec& b) {
    if (is_zero(c) || b.empty()) return;
    SVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rat s = a[i].second + c * b[j].second;
            if (!is_zero(s)) out.emplace_back(a[i].first, s);
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

SVec svec_scaled(const SVec& v, const Rat& c) {
    if (is_zero(c)) return {};
    SVec r = v;
    for (auto& [i, x] : r) x *= c;
    return r;
}

std::size_t SparseCols::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols) n += c.size();
    return n;
}

SVec RowSpace::reduce(SVec v) const {
    // Rows are fully reduced, so eliminating the entry at a pivot column only
    // introduces non-pivot columns to the right of it.
    std::size_t k = 0;
    while (k < v.size()) {
        auto it = pivots_.find(v[k].first);
        if (it == pivots_.end()) {
            ++k;
            continue;
        }
        Rat c = -v[k].second;
        svec_axpy(v, c, rows_[it->second]);
    }
    return v;
}

bool RowSpace::insert(SVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rat lead = v.front().second;
    if (lead != 1) {
        Rat inv = 1 / lead;
        for (auto& [i, x] : v) x *= inv;
    }
    int pc = v.front().first;
    // keep full reduction: clear the new pivot column from existing rows
    for (auto& r : rows_) {
        auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(pc, Rat(0)),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it != r.end() && it->first == pc) {
            Rat c = -it->second;
            svec_axpy(r, c, v);
        }
    }
    pivots_[pc] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

QVec RowSpace::coords(const SVec& v) const {
    QVec c(rows_.size(), Rat(0));
    SVec rem = v;
    for (const auto& [pc, ri] : pivots_) {
        auto it = std::lower_bound(rem.begin(), rem.end(), std::make_pair(pc, Rat(0)),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it != rem.end() && it->first == pc) {
            c[ri] = it->second;
            svec_axpy(rem, -it->second, rows_[ri]);
        }
    }
    if (!rem.empty()) throw InternalMismatch("coords: vector outside row space");
    return c;
}

int rank_exact(const SparseCols& m) {
    RowSpace rs;
    for (const auto& c : m.cols) rs.insert(c);
    return rs.dim();
}

void QMat::add_row(QVec r) {
    if (ncols_ == 0) ncols_ = static_cast<int>(r.size());
    rows_.push_back(std::move(r));
}

QMat QMat::mul(const QMat& o) const {
    QMat r(nrows(), o.ncols());
    for (int i = 0; i < nrows(); ++i)
        for (int k = 0; k < ncols_; ++k) {
            const Rat& a = rows_[i][k];
            if (is_zero(a)) continue;
            for (int j = 0; j < o.ncols(); ++j) {
                const Rat& b = o.at(k, j);
                if (!is_zero(b)) r.at(i, j) += a * b;
            }
        }
    return r;
}

QMat QMat::sub(const QMat& o) const {
    QMat r = *this;
    for (int i = 0; i < nrows(); ++i) vec_sub(r.row(i), o.row(i));
    return r;
}

bool QMat::is_zero_mat() const {
    for (const auto& r : rows_)
        if (!vec_is_zero(r)) return false;
    return true;
}

QMat QMat::identity(int n) {
    QMat r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

std::vector<int> QMat::rref() {
    std::vector<int> pivots;
    int pr = 0;
    for (int pc = 0; pc < ncols_ && pr < nrows(); ++pc) {
        int sel = -1;
        for (int i = pr; i < nrows(); ++i)
            if (!is_zero(rows_[i][pc])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows_[pr], rows_[sel]);
        Rat inv = 1 / rows_[pr][pc];
        for (int j = pc; j < ncols_; ++j) rows_[pr][j] *= inv;
        for (int i = 0; i < nrows(); ++i) {
            if (i == pr || is_zero(rows_[i][pc])) continue;
            Rat c = -rows_[i][pc];
            for (int j = pc; j < ncols_; ++j) rows_[i][j] += c * rows_[pr][j];
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

Nullspace nullspace(QMat a) {
    int n = a.ncols();
    std::vector<int> piv = a.rref();
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    Nullspace ns;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        QVec v = zero_vec(n);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a.at(static_cast<int>(r), f);
        ns.free_cols.push_back(f);
        ns.basis.push_back(std::move(v));
    }
    return ns;
}

QVec Nullspace::coords(const QVec& v) const {
    QVec c;
    c.reserve(free_cols.size());
    for (int f : free_cols) c.push_back(v[f]);
    QVec rec = zero_vec(v.size());
    for (std::size_t i = 0; i < basis.size(); ++i) vec_axpy(rec, c[i], basis[i]);
    vec_sub(rec, v);
    if (!vec_is_zero(rec)) throw InternalMismatch("coords: vector outside nullspace span");
    return c;
}

QVec mat_apply(const QMat& a, const QVec& v) {
    QVec r = zero_vec(a.nrows());
    for (int i = 0; i < a.nrows(); ++i) {
        Rat s = 0;
        for (int j = 0; j < a.ncols(); ++j)
            if (!is_zero(v[j])) s += a.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

} // namespace jhom
