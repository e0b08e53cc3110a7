#ifndef JHOM_RATIONAL_HPP
#define JHOM_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

#include "jhom/errors.hpp"

namespace jhom {

// Exact scalar type. No floating point anywhere in the library.
using Rat = mpq_class;

using QVec = std::vector<Rat>;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Rat parse_rat(const std::string& s) {
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline QVec zero_vec(std::size_t n) { return QVec(n, Rat(0)); }

inline bool vec_is_zero(const QVec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

inline QVec& vec_add(QVec& a, const QVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline QVec& vec_sub(QVec& a, const QVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline QVec& vec_axpy(QVec& a, const Rat& c, const QVec& b) {
    if (is_zero(c)) return a;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

inline QVec vec_scaled(const QVec& v, const Rat& c) {
    QVec r(v);
    for (auto& x : r) x *= c;
    return r;
}

} // namespace jhom

#endif
