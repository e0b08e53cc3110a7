#include "jhom/jmat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "jhom/errors.hpp"

namespace jhom {

JMat JMat::E(const InvolutiveAlgebra& alg, long i, long j, QVec coeff) {
    JMat m(alg);
    m.add_entry(i, j, coeff);
    return m;
}

JMat JMat::shift(const InvolutiveAlgebra& alg, long offset, QVec coeff) {
    JMat m(alg);
    m.add_shift(offset, coeff);
    return m;
}

JMat JMat::one(const InvolutiveAlgebra& alg) { return shift(alg, 0, alg.unit()); }

JMat JMat::right_shift(const InvolutiveAlgebra& alg) { return shift(alg, 1, alg.unit()); }

void JMat::add_entry(long i, long j, const QVec& coeff) {
    if (vec_is_zero(coeff)) return;
    auto [it, fresh] = fin_.try_emplace({i, j}, coeff);
    if (!fresh) {
        vec_add(it->second, coeff);
        if (vec_is_zero(it->second)) fin_.erase(it);
    }
}

void JMat::add_shift(long offset, const QVec& coeff) {
    if (vec_is_zero(coeff)) return;
    auto [it, fresh] = shift_.try_emplace(offset, coeff);
    if (!fresh) {
        vec_add(it->second, coeff);
        if (vec_is_zero(it->second)) shift_.erase(it);
    }
}

void JMat::prune() {
    for (auto it = fin_.begin(); it != fin_.end();)
        it = vec_is_zero(it->second) ? fin_.erase(it) : std::next(it);
    for (auto it = shift_.begin(); it != shift_.end();)
        it = vec_is_zero(it->second) ? shift_.erase(it) : std::next(it);
}

long JMat::bandwidth() const {
    long b = 0;
    for (const auto& [ij, _] : fin_) b = std::max(b, std::labs(ij.first - ij.second));
    for (const auto& [a, _] : shift_) b = std::max(b, std::labs(a));
    return b;
}

JMat JMat::add(const JMat& o) const {
    JMat r = *this;
    for (const auto& [ij, c] : o.fin_) r.add_entry(ij.first, ij.second, c);
    for (const auto& [a, c] : o.shift_) r.add_shift(a, c);
    return r;
}

JMat JMat::sub(const JMat& o) const { return add(o.neg()); }

JMat JMat::neg() const { return scaled(Rat(-1)); }

JMat JMat::scaled(const Rat& c) const {
    JMat r(*alg_);
    if (jhom::is_zero(c)) return r;
    for (const auto& [ij, v] : fin_) r.fin_[ij] = vec_scaled(v, c);
    for (const auto& [a, v] : shift_) r.shift_[a] = vec_scaled(v, c);
    return r;
}

JMat JMat::mul(const JMat& o) const {
    JMat r(*alg_);
    for (const auto& [ij, a] : fin_)
        for (const auto& [kl, b] : o.fin_)
            if (ij.second == kl.first) r.add_entry(ij.first, kl.second, alg_->mul(a, b));
    for (const auto& [ij, a] : fin_)
        for (const auto& [off, b] : o.shift_) r.add_entry(ij.first, ij.second + off, alg_->mul(a, b));
    for (const auto& [off, a] : shift_)
        for (const auto& [kl, b] : o.fin_) r.add_entry(kl.first - off, kl.second, alg_->mul(a, b));
    for (const auto& [off1, a] : shift_)
        for (const auto& [off2, b] : o.shift_) r.add_shift(off1 + off2, alg_->mul(a, b));
    return r;
}

JMat JMat::transpose() const {
    JMat r(*alg_);
    for (const auto& [ij, a] : fin_) r.add_entry(ij.second, ij.first, alg_->bar(a));
    for (const auto& [off, a] : shift_) r.add_shift(-off, alg_->bar(a));
    return r;
}

JMat JMat::star() const {
    JMat r(*alg_);
    for (const auto& [ij, a] : fin_) r.add_entry(-ij.second, -ij.first, alg_->bar(a));
    for (const auto& [off, a] : shift_) r.add_shift(off, alg_->bar(a));
    return r;
}

JMat JMat::tau(TauFlavor flavor, long l) const {
    bool signed_form = false;
    switch (flavor) {
        case TauFlavor::tau_l: signed_form = true; break;
        case TauFlavor::tau_l_s: signed_form = false; break;
        case TauFlavor::tau_B:
            signed_form = false;
            l = 0;
            break;
        case TauFlavor::tau_C:
            signed_form = true;
            l = -1;
            break;
        case TauFlavor::tau_D:
            signed_form = false;
            l = -1;
            break;
    }
    JMat r(*alg_);
    for (const auto& [ij, a] : fin_) {
        long rr = ij.first, ss = ij.second;
        QVec c = alg_->bar(a);
        if (signed_form && ((rr + ss) % 2 != 0)) c = vec_scaled(c, Rat(-1));
        r.add_entry(l - ss, l - rr, c);
    }
    for (const auto& [off, a] : shift_) {
        QVec c = alg_->bar(a);
        if (signed_form && (off % 2 != 0)) c = vec_scaled(c, Rat(-1));
        r.add_shift(off, c);
    }
    return r;
}

JMat JMat::fixed_point_project(TauFlavor flavor, long l) const {
    return sub(tau(flavor, l)).scaled(Rat(1, 2));
}

namespace {
inline bool in_half(long i, int sign) { return sign > 0 ? i >= 0 : i < 0; }
} // namespace

JMat JMat::corner_compress(int left_sign, int right_sign) const {
    JMat r(*alg_);
    for (const auto& [ij, a] : fin_)
        if (in_half(ij.first, left_sign) && in_half(ij.second, right_sign)) r.add_entry(ij.first, ij.second, a);
    for (const auto& [off, a] : shift_) {
        if (left_sign == right_sign)
            throw ShiftPartPresent("corner compression with equal halves leaves a half-infinite shift pattern");
        // rows i with i in left half and i+off in right half; mixed halves
        // give a finite window
        long lo, hi; // inclusive range of i
        if (left_sign > 0) {
            lo = 0;
            hi = -off - 1; // i >= 0, i + off < 0
        } else {
            lo = -off; // i < 0, i + off >= 0
            hi = -1;
        }
        for (long i = lo; i <= hi; ++i) r.add_entry(i, i + off, a);
    }
    return r;
}

QVec JMat::trace_ab() const {
    if (shift_.count(0)) throw NotTraceClass("matrix has an infinite diagonal (offset-0 shift)");
    QVec s = zero_vec(alg_->dim());
    for (const auto& [ij, a] : fin_)
        if (ij.first == ij.second) vec_add(s, a);
    return alg_->ab_project(s);
}

QVec JMat::entry(long i, long j) const {
    QVec r = zero_vec(alg_->dim());
    auto it = fin_.find({i, j});
    if (it != fin_.end()) vec_add(r, it->second);
    auto st = shift_.find(j - i);
    if (st != shift_.end()) vec_add(r, st->second);
    return r;
}

bool JMat::operator==(const JMat& o) const { return fin_ == o.fin_ && shift_ == o.shift_; }

std::string JMat::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, a] : fin_) {
        if (!first) os << " + ";
        os << "E[" << ij.first << "," << ij.second << "](" << alg_->format_elem(a) << ")";
        first = false;
    }
    for (const auto& [off, a] : shift_) {
        if (!first) os << " + ";
        os << "S^" << off << "(" << alg_->format_elem(a) << ")";
        first = false;
    }
    return os.str();
}

int jmat_cmp(const JMat& a, const JMat& b) {
    auto cmp_vec = [](const QVec& x, const QVec& y) -> int {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = cmp(x[i], y[i]);
            if (c != 0) return c;
        }
        return 0;
    };
    if (a.fin().size() != b.fin().size()) return a.fin().size() < b.fin().size() ? -1 : 1;
    if (a.shifts().size() != b.shifts().size()) return a.shifts().size() < b.shifts().size() ? -1 : 1;
    for (auto ia = a.fin().begin(), ib = b.fin().begin(); ia != a.fin().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp_vec(ia->second, ib->second);
        if (c != 0) return c;
    }
    for (auto ia = a.shifts().begin(), ib = b.shifts().begin(); ia != a.shifts().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp_vec(ia->second, ib->second);
        if (c != 0) return c;
    }
    return 0;
}

namespace {

// Anti-diagonal kernel pattern: entry (i, level - i) = coeff * (-1)^i when
// alternating, else coeff. Covers J_l (alternating) and J_l^s (constant).
struct AntiDiag {
    long level;
    Rat coeff;
    bool alternating;
    bool operator==(const AntiDiag& o) const {
        return level == o.level && coeff == o.coeff && alternating == o.alternating;
    }
};

// S^{-1} A S^{1}: entry (i,j) = A_{i-1,j-1}
AntiDiag conj_by_right_shift(const AntiDiag& a) {
    return {a.level + 2, a.alternating ? Rat(-a.coeff) : a.coeff, a.alternating};
}

} // namespace

bool shift_conjugation_check(const InvolutiveAlgebra& alg, long l, const JMat& x) {
    JMat n = JMat::right_shift(alg);
    JMat n_inv = JMat::shift(alg, -1, alg.unit());
    // transpose(N) N = I, i.e. N^{-1} = transpose(N)
    if (!(n.transpose().mul(n) == JMat::one(alg))) return false;
    if (!(n.transpose() == n_inv)) return false;
    // N^{-1} J_l N = -J_{l+2} within the closed anti-diagonal family
    AntiDiag jl{l, Rat(1), true};
    AntiDiag expect{l + 2, Rat(-1), true};
    if (!(conj_by_right_shift(jl) == expect)) return false;
    // tau_{l+2} = Ad(N^{-1}) after tau_l after Ad(N)
    JMat lhs = n_inv.mul(n.mul(x).mul(n_inv).tau(TauFlavor::tau_l, l)).mul(n);
    JMat rhs = x.tau(TauFlavor::tau_l, l + 2);
    return lhs == rhs;
}

namespace {

struct Parser {
    const InvolutiveAlgebra& alg;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos));
    }
    long parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at position " + std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
    Rat parse_number() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        if (pos == start) throw ParseError("expected number at position " + std::to_string(start));
        return parse_rat(s.substr(start, pos - start));
    }
    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '^' || s[pos] == '.'))
            ++pos;
        return s.substr(start, pos - start);
    }

    // coefficient expression: sum of [rat][*label] terms
    QVec parse_coeff() {
        QVec v = zero_vec(alg.dim());
        bool more = true;
        Rat sign = 1;
        while (more) {
            skip_ws();
            // leading sign not followed by a digit flips the term sign
            while (pos < s.size() && (s[pos] == '-' || s[pos] == '+') &&
                   !(pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1])))) {
                if (s[pos] == '-') sign = -sign;
                ++pos;
                skip_ws();
            }
            Rat c = sign;
            bool have_num = false;
            if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' || s[pos] == '+')) {
                c = sign * parse_number();
                have_num = true;
            }
            skip_ws();
            bool have_label = false;
            if (have_num && eat('*')) have_label = true;
            if (!have_num) have_label = true;
            if (have_label) {
                std::string label = parse_ident();
                if (label.empty()) throw ParseError("expected basis label at position " + std::to_string(pos));
                const auto& labels = alg.labels();
                auto it = std::find(labels.begin(), labels.end(), label);
                if (it == labels.end()) throw ParseError("unknown basis label '" + label + "'");
                v[static_cast<std::size_t>(it - labels.begin())] += c;
            } else {
                vec_axpy(v, c, alg.unit());
            }
            skip_ws();
            if (eat('+')) {
                sign = 1;
            } else if (pos < s.size() && s[pos] == '-') {
                ++pos;
                sign = -1;
            } else {
                more = false;
            }
        }
        return v;
    }

    JMat parse() {
        JMat m(alg);
        Rat sign = 1;
        for (;;) {
            skip_ws();
            while (pos < s.size() && s[pos] == '-' &&
                   !(pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1])))) {
                sign = -sign;
                ++pos;
                skip_ws();
            }
            Rat mult = sign;
            if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-')) {
                mult = sign * parse_number();
                skip_ws();
                if (pos < s.size() && s[pos] == '*') ++pos;
            }
            skip_ws();
            if (pos >= s.size()) throw ParseError("unexpected end of input");
            if (s[pos] == 'E') {
                ++pos;
                expect('[');
                long i = parse_int();
                expect(',');
                long j = parse_int();
                expect(']');
                QVec c = alg.unit();
                if (eat('(')) {
                    c = parse_coeff();
                    expect(')');
                }
                m.add_entry(i, j, vec_scaled(c, mult));
            } else if (s[pos] == 'S') {
                ++pos;
                expect('^');
                long a = parse_int();
                QVec c = alg.unit();
                if (eat('(')) {
                    c = parse_coeff();
                    expect(')');
                }
                m.add_shift(a, vec_scaled(c, mult));
            } else if (s[pos] == '0') {
                ++pos;
            } else {
                throw ParseError(std::string("unexpected character '") + s[pos] + "' at position " +
                                 std::to_string(pos));
            }
            skip_ws();
            if (eat('+')) {
                sign = 1;
            } else if (eat('-')) {
                sign = -1;
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != s.size()) throw ParseError("trailing input at position " + std::to_string(pos));
        return m;
    }
};

} // namespace

JMat parse_jmat(const InvolutiveAlgebra& alg, const std::string& text) {
    Parser p{alg, text};
    return p.parse();
}

} // namespace jhom
