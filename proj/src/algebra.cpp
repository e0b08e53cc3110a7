#include "jhom/algebra.hpp"

#include <fstream>
#include <sstream>

#include "jhom/errors.hpp"

namespace jhom {

InvolutiveAlgebra InvolutiveAlgebra::make(Spec spec) {
    int d = spec.dim;
    if (d <= 0) throw InvalidParameter("algebra dimension must be positive");
    if (static_cast<int>(spec.labels.size()) != d) throw InvalidParameter("label count != dim");
    if (static_cast<int>(spec.mult.size()) != d * d) throw InvalidParameter("structure-constant table size != dim^2");
    for (const auto& v : spec.mult)
        if (static_cast<int>(v.size()) != d) throw InvalidParameter("structure-constant vector length != dim");
    if (static_cast<int>(spec.unit.size()) != d) throw InvalidParameter("unit vector length != dim");
    if (spec.involution.nrows() != d || spec.involution.ncols() != d)
        throw InvalidParameter("involution matrix shape != dim x dim");
    InvolutiveAlgebra a(std::move(spec));
    a.validate();
    a.build_derived();
    return a;
}

QVec InvolutiveAlgebra::mul(const QVec& a, const QVec& b) const {
    int d = spec_.dim;
    QVec r = zero_vec(d);
    for (int i = 0; i < d; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j < d; ++j) {
            if (is_zero(b[j])) continue;
            Rat c = a[i] * b[j];
            vec_axpy(r, c, spec_.mult[i * d + j]);
        }
    }
    return r;
}

QVec InvolutiveAlgebra::bar(const QVec& a) const { return mat_apply(spec_.involution, a); }

QVec InvolutiveAlgebra::basis_vec(int i) const {
    QVec v = zero_vec(spec_.dim);
    v[i] = 1;
    return v;
}

QVec InvolutiveAlgebra::scalar(const Rat& c) const { return vec_scaled(spec_.unit, c); }

void InvolutiveAlgebra::validate() const {
    int d = spec_.dim;
    auto e = [&](int i) { return basis_vec(i); };
    for (int i = 0; i < d; ++i) {
        QVec li = mul(spec_.unit, e(i));
        QVec ri = mul(e(i), spec_.unit);
        if (li != e(i) || ri != e(i))
            throw AxiomViolation("unit law fails on basis element " + spec_.labels[i]);
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                QVec lhs = mul(mul(e(i), e(j)), e(k));
                QVec rhs = mul(e(i), mul(e(j), e(k)));
                if (lhs != rhs)
                    throw AxiomViolation("associativity fails on (" + spec_.labels[i] + "," + spec_.labels[j] +
                                         "," + spec_.labels[k] + ")");
            }
    for (int i = 0; i < d; ++i) {
        if (bar(bar(e(i))) != e(i))
            throw AxiomViolation("involution does not square to identity on " + spec_.labels[i]);
        for (int j = 0; j < d; ++j) {
            QVec lhs = bar(mul(e(i), e(j)));
            QVec rhs = mul(bar(e(j)), bar(e(i)));
            if (lhs != rhs)
                throw AxiomViolation("involution is not an anti-homomorphism on (" + spec_.labels[i] + "," +
                                     spec_.labels[j] + ")");
        }
    }
}

void InvolutiveAlgebra::build_derived() {
    int d = spec_.dim;
    // eigenspaces of the involution matrix
    QMat minus = spec_.involution, plus = spec_.involution;
    for (int i = 0; i < d; ++i) {
        minus.at(i, i) -= 1; // bar - id : kernel = R_1
        plus.at(i, i) += 1;  // bar + id : kernel = R_{-1}
    }
    for (const auto& v : nullspace(minus).basis) plus_basis_.push_back(v);
    for (const auto& v : nullspace(plus).basis) minus_basis_.push_back(v);

    // commutator span
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            QVec c = mul(basis_vec(i), basis_vec(j));
            vec_sub(c, mul(basis_vec(j), basis_vec(i)));
            comm_span_.insert(svec_from_dense(c));
        }
    std::vector<bool> is_piv(d, false);
    for (const auto& [pc, _] : comm_span_.pivots()) is_piv[pc] = true;
    for (int i = 0; i < d; ++i)
        if (!is_piv[i]) ab_cols_.push_back(i);

    // induced involution on the quotient
    int q = ab_dim();
    ab_bar_mat_ = QMat(q, q);
    for (int j = 0; j < q; ++j) {
        QVec img = ab_project(bar(ab_lift([&] {
            QVec c = zero_vec(q);
            c[j] = 1;
            return c;
        }())));
        for (int i = 0; i < q; ++i) ab_bar_mat_.at(i, j) = img[i];
    }
    QMat fix = ab_bar_mat_;
    for (int i = 0; i < q; ++i) fix.at(i, i) -= 1;
    for (const auto& v : nullspace(fix).basis) {
        ab_fixed_basis_.push_back(v);
        ab_fixed_span_.insert(svec_from_dense(v));
    }
}

QVec InvolutiveAlgebra::ab_project(const QVec& a) const {
    SVec r = comm_span_.reduce(svec_from_dense(a));
    QVec dense = svec_to_dense(r, spec_.dim);
    QVec out;
    out.reserve(ab_cols_.size());
    for (int c : ab_cols_) out.push_back(dense[c]);
    return out;
}

QVec InvolutiveAlgebra::ab_lift(const QVec& ab) const {
    QVec v = zero_vec(spec_.dim);
    for (std::size_t i = 0; i < ab_cols_.size(); ++i) v[ab_cols_[i]] = ab[i];
    return v;
}

QVec InvolutiveAlgebra::ab_bar(const QVec& ab) const { return mat_apply(ab_bar_mat_, ab); }

QVec InvolutiveAlgebra::ab_fixed_project(const QVec& ab) const {
    QVec r = ab_bar(ab);
    vec_add(r, ab);
    for (auto& x : r) x /= 2;
    return r;
}

bool InvolutiveAlgebra::ab_fixed_contains(const QVec& ab) const {
    return ab_fixed_span_.contains(svec_from_dense(ab));
}

std::string InvolutiveAlgebra::format_elem(const QVec& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < spec_.dim; ++i) {
        if (is_zero(a[i])) continue;
        if (!first) os << " + ";
        os << rat_str(a[i]) << "*" << spec_.labels[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

InvolutiveAlgebra::Spec base_field_spec() {
    InvolutiveAlgebra::Spec s;
    s.name = "k";
    s.dim = 1;
    s.labels = {"1"};
    s.mult = {QVec{Rat(1)}};
    s.unit = {Rat(1)};
    s.involution = QMat(1, 1);
    s.involution.at(0, 0) = 1;
    return s;
}

InvolutiveAlgebra::Spec dual_numbers_spec(int sign) {
    InvolutiveAlgebra::Spec s;
    s.name = sign > 0 ? "dual-plus" : "dual-minus";
    s.dim = 2;
    s.labels = {"1", "eps"};
    s.mult.assign(4, zero_vec(2));
    s.mult[0 * 2 + 0][0] = 1;
    s.mult[0 * 2 + 1][1] = 1;
    s.mult[1 * 2 + 0][1] = 1;
    // eps*eps = 0
    s.unit = zero_vec(2);
    s.unit[0] = 1;
    s.involution = QMat(2, 2);
    s.involution.at(0, 0) = 1;
    s.involution.at(1, 1) = sign;
    return s;
}

InvolutiveAlgebra::Spec trunc_poly_spec(int m, int sign) {
    InvolutiveAlgebra::Spec s;
    s.name = "trunc" + std::to_string(m) + (sign > 0 ? "-plus" : "-minus");
    s.dim = m;
    for (int i = 0; i < m; ++i) s.labels.push_back(i == 0 ? "1" : "t^" + std::to_string(i));
    s.mult.assign(m * m, zero_vec(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i + j < m) s.mult[i * m + j][i + j] = 1;
    s.unit = zero_vec(m);
    s.unit[0] = 1;
    s.involution = QMat(m, m);
    for (int i = 0; i < m; ++i) s.involution.at(i, i) = (sign > 0 || i % 2 == 0) ? 1 : -1;
    return s;
}

InvolutiveAlgebra::Spec m2_spec() {
    InvolutiveAlgebra::Spec s;
    s.name = "m2";
    s.dim = 4;
    s.labels = {"e11", "e12", "e21", "e22"};
    s.mult.assign(16, zero_vec(4));
    auto idx = [](int a, int b) { return 2 * a + b; }; // e_{a+1,b+1}
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c) s.mult[idx(a, b) * 4 + idx(c, d)][idx(a, d)] = 1;
    s.unit = zero_vec(4);
    s.unit[idx(0, 0)] = 1;
    s.unit[idx(1, 1)] = 1;
    s.involution = QMat(4, 4); // transpose
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s.involution.at(idx(b, a), idx(a, b)) = 1;
    return s;
}

InvolutiveAlgebra::Spec kz2_spec() {
    InvolutiveAlgebra::Spec s;
    s.name = "kz2";
    s.dim = 2;
    s.labels = {"1", "g"};
    s.mult.assign(4, zero_vec(2));
    s.mult[0 * 2 + 0][0] = 1;
    s.mult[0 * 2 + 1][1] = 1;
    s.mult[1 * 2 + 0][1] = 1;
    s.mult[1 * 2 + 1][0] = 1; // g^2 = 1
    s.unit = zero_vec(2);
    s.unit[0] = 1;
    s.involution = QMat(2, 2); // group inversion: g -> g^{-1} = g
    s.involution.at(0, 0) = 1;
    s.involution.at(1, 1) = 1;
    return s;
}

} // namespace

InvolutiveAlgebra catalog_algebra(const std::string& name) {
    if (name == "k") return InvolutiveAlgebra::make(base_field_spec());
    if (name == "dual-plus") return InvolutiveAlgebra::make(dual_numbers_spec(+1));
    if (name == "dual-minus") return InvolutiveAlgebra::make(dual_numbers_spec(-1));
    if (name == "trunc3-plus") return InvolutiveAlgebra::make(trunc_poly_spec(3, +1));
    if (name == "trunc3-minus") return InvolutiveAlgebra::make(trunc_poly_spec(3, -1));
    if (name == "m2") return InvolutiveAlgebra::make(m2_spec());
    if (name == "kz2") return InvolutiveAlgebra::make(kz2_spec());
    throw InvalidParameter("unknown catalog algebra: " + name);
}

std::vector<std::string> catalog_names() {
    return {"k", "dual-plus", "dual-minus", "trunc3-plus", "trunc3-minus", "m2", "kz2"};
}

InvolutiveAlgebra::Spec load_algebra_spec(std::istream& in) {
    InvolutiveAlgebra::Spec s;
    s.dim = -1;
    std::string line;
    int lineno = 0;
    auto need_dim = [&] {
        if (s.dim < 0) throw ParseError("line " + std::to_string(lineno) + ": 'dim' must come first");
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "dim") {
            int d;
            if (!(ls >> d) || d <= 0) throw ParseError("line " + std::to_string(lineno) + ": bad dim");
            s.dim = d;
            s.labels.assign(d, "");
            s.mult.assign(static_cast<std::size_t>(d) * d, zero_vec(d));
            s.unit = zero_vec(d);
            s.involution = QMat(d, d);
        } else if (kw == "label") {
            need_dim();
            int i;
            std::string name;
            if (!(ls >> i >> name) || i < 0 || i >= s.dim)
                throw ParseError("line " + std::to_string(lineno) + ": bad label entry");
            s.labels[i] = name;
        } else if (kw == "sc") {
            need_dim();
            int i, j, k;
            std::string v;
            if (!(ls >> i >> j >> k >> v) || i < 0 || j < 0 || k < 0 || i >= s.dim || j >= s.dim || k >= s.dim)
                throw ParseError("line " + std::to_string(lineno) + ": bad sc entry");
            s.mult[i * s.dim + j][k] = parse_rat(v);
        } else if (kw == "unit") {
            need_dim();
            int i;
            std::string v;
            if (!(ls >> i >> v) || i < 0 || i >= s.dim)
                throw ParseError("line " + std::to_string(lineno) + ": bad unit entry");
            s.unit[i] = parse_rat(v);
        } else if (kw == "inv") {
            need_dim();
            int i, j;
            std::string v;
            if (!(ls >> i >> j >> v) || i < 0 || j < 0 || i >= s.dim || j >= s.dim)
                throw ParseError("line " + std::to_string(lineno) + ": bad inv entry");
            s.involution.at(i, j) = parse_rat(v);
        } else if (kw == "name") {
            std::string n;
            ls >> n;
            s.name = n;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    if (s.dim < 0) throw ParseError("missing 'dim'");
    for (int i = 0; i < s.dim; ++i)
        if (s.labels[i].empty()) s.labels[i] = "e" + std::to_string(i);
    return s;
}

InvolutiveAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open algebra file: " + path);
    return InvolutiveAlgebra::make(load_algebra_spec(in));
}

} // namespace jhom
