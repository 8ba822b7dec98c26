#include "bicircle/qpoly.hpp"

#include <array>
#include <sstream>

#include "bicircle/linalg.hpp"

namespace bicircle {

namespace {

Rat pow_rat(const Rat& base, int e) {
    Rat acc(1);
    for (int k = 0; k < e; ++k) acc *= base;
    return acc;
}

// binomial(n, k) for tiny n
Rat binom(int n, int k) {
    Rat acc(1);
    for (int t = 1; t <= k; ++t) acc *= Rat(n - t + 1, t);
    return acc;
}

} // namespace

// ---------------------------------------------------------------- QPoly2

QPoly2 QPoly2::constant(const Quat& c) { return monomial(0, 0, c); }

QPoly2 QPoly2::monomial(int du, int dv, const Quat& c) {
    QPoly2 p;
    p.set_coef(du, dv, c);
    return p;
}

std::pair<int, int> QPoly2::bidegree() const {
    int du = -1, dv = -1;
    for (const auto& [m, c] : terms_) {
        if (m.du > du) du = m.du;
        if (m.dv > dv) dv = m.dv;
    }
    return {du, dv};
}

bool QPoly2::depends_u() const {
    for (const auto& [m, c] : terms_)
        if (m.du > 0) return true;
    return false;
}

bool QPoly2::depends_v() const {
    for (const auto& [m, c] : terms_)
        if (m.dv > 0) return true;
    return false;
}

Quat QPoly2::coef(int du, int dv) const {
    auto it = terms_.find(Mono2{du, dv});
    return it == terms_.end() ? Quat::zero() : it->second;
}

void QPoly2::set_coef(int du, int dv, const Quat& c) {
    if (c.is_zero())
        terms_.erase(Mono2{du, dv});
    else
        terms_[Mono2{du, dv}] = c;
}

QPoly2 QPoly2::operator-() const {
    QPoly2 r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

QPoly2 operator+(const QPoly2& a, const QPoly2& b) {
    QPoly2 r = a;
    for (const auto& [m, c] : b.terms_) r.set_coef(m.du, m.dv, r.coef(m.du, m.dv) + c);
    return r;
}

QPoly2 operator-(const QPoly2& a, const QPoly2& b) {
    QPoly2 r = a;
    for (const auto& [m, c] : b.terms_) r.set_coef(m.du, m.dv, r.coef(m.du, m.dv) - c);
    return r;
}

QPoly2 operator*(const QPoly2& a, const QPoly2& b) {
    QPoly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Mono2 m{ma.du + mb.du, ma.dv + mb.dv};
            r.set_coef(m.du, m.dv, r.coef(m.du, m.dv) + ca * cb);
        }
    return r;
}

QPoly2 operator*(const Quat& c, const QPoly2& p) {
    QPoly2 r;
    for (const auto& [m, pc] : p.terms_) r.set_coef(m.du, m.dv, c * pc);
    return r;
}

QPoly2 operator*(const QPoly2& p, const Quat& c) {
    QPoly2 r;
    for (const auto& [m, pc] : p.terms_) r.set_coef(m.du, m.dv, pc * c);
    return r;
}

QPoly2 QPoly2::conj() const {
    QPoly2 r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
    return r;
}

RPolyN QPoly2::norm_sq() const {
    QPoly2 prod = *this * conj();
    RPolyN out(2);
    for (const auto& [m, c] : prod.terms()) {
        if (!c.im_part().is_zero())
            fail(errc::internal_inconsistency,
                 "norm square has a non-real coefficient at u^" + std::to_string(m.du) +
                     " v^" + std::to_string(m.dv));
        out.set_coef({m.du, m.dv}, c.re_part());
    }
    return out;
}

Quat QPoly2::eval(const Rat& u0, const Rat& v0) const {
    Quat acc;
    for (const auto& [m, c] : terms_) acc = acc + c * (pow_rat(u0, m.du) * pow_rat(v0, m.dv));
    return acc;
}

QPoly2 QPoly2::shift(const Rat& su, const Rat& sv) const {
    QPoly2 out;
    for (const auto& [m, c] : terms_) {
        // (u + su)^du (v + sv)^dv
        for (int a = 0; a <= m.du; ++a)
            for (int b = 0; b <= m.dv; ++b) {
                Rat scale = binom(m.du, a) * pow_rat(su, m.du - a) * binom(m.dv, b) *
                            pow_rat(sv, m.dv - b);
                if (scale.is_zero()) continue;
                out.set_coef(a, b, out.coef(a, b) + c * scale);
            }
    }
    return out;
}

QPoly2 QPoly2::transpose() const {
    QPoly2 r;
    for (const auto& [m, c] : terms_) r.set_coef(m.dv, m.du, c);
    return r;
}

QPoly2 QPoly2::coef_of_v_power(int k) const {
    QPoly2 r;
    for (const auto& [m, c] : terms_)
        if (m.dv == k) r.set_coef(m.du, 0, c);
    return r;
}

QPoly2 QPoly2::coef_of_u_power(int k) const {
    QPoly2 r;
    for (const auto& [m, c] : terms_)
        if (m.du == k) r.set_coef(0, m.dv, c);
    return r;
}

std::string QPoly2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        if (m.du > 0) os << "*u^" << m.du;
        if (m.dv > 0) os << "*v^" << m.dv;
    }
    return os.str();
}

// ---------------------------------------------------------------- RPolyN

RPolyN::RPolyN(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 4)
        fail(errc::domain_violation, "RPolyN supports 1 to 4 variables");
}

RPolyN RPolyN::constant(int nvars, const Rat& c) {
    RPolyN p(nvars);
    p.set_coef(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

RPolyN RPolyN::monomial(const std::vector<int>& exps, const Rat& c) {
    RPolyN p(static_cast<int>(exps.size()));
    p.set_coef(exps, c);
    return p;
}

RPolyN RPolyN::variable(int nvars, int index) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e.at(static_cast<size_t>(index)) = 1;
    return monomial(e, Rat(1));
}

bool RPolyN::is_constant() const { return total_degree() <= 0; }

int RPolyN::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int k : e) t += k;
        if (t > d) d = t;
    }
    return d;
}

int RPolyN::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        if (e[static_cast<size_t>(var)] > d) d = e[static_cast<size_t>(var)];
    return d;
}

Rat RPolyN::coef(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

void RPolyN::set_coef(const std::vector<int>& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        fail(errc::domain_violation, "exponent vector length mismatch");
    if (c.is_zero())
        terms_.erase(exps);
    else
        terms_[exps] = c;
}

RPolyN RPolyN::operator-() const {
    RPolyN r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

RPolyN operator+(const RPolyN& a, const RPolyN& b) {
    if (a.nvars_ != b.nvars_) fail(errc::domain_violation, "variable count mismatch");
    RPolyN r = a;
    for (const auto& [e, c] : b.terms_) r.set_coef(e, r.coef(e) + c);
    return r;
}

RPolyN operator-(const RPolyN& a, const RPolyN& b) {
    if (a.nvars_ != b.nvars_) fail(errc::domain_violation, "variable count mismatch");
    RPolyN r = a;
    for (const auto& [e, c] : b.terms_) r.set_coef(e, r.coef(e) - c);
    return r;
}

RPolyN operator*(const RPolyN& a, const RPolyN& b) {
    if (a.nvars_ != b.nvars_) fail(errc::domain_violation, "variable count mismatch");
    RPolyN r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.set_coef(e, r.coef(e) + ca * cb);
        }
    return r;
}

RPolyN operator*(const Rat& s, const RPolyN& p) {
    RPolyN r(p.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
    return r;
}

Rat RPolyN::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        fail(errc::domain_violation, "evaluation point length mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (size_t k = 0; k < e.size(); ++k) term *= pow_rat(point[k], e[k]);
        acc += term;
    }
    return acc;
}

RPolyN RPolyN::substitute(int var, const Rat& value) const {
    RPolyN r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        int d = e2[static_cast<size_t>(var)];
        e2[static_cast<size_t>(var)] = 0;
        r.set_coef(e2, r.coef(e2) + c * pow_rat(value, d));
    }
    return r;
}

RPolyN RPolyN::drop_var(int var) const {
    RPolyN r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(var)] != 0)
            fail(errc::domain_violation, "drop_var on a used variable");
        std::vector<int> e2;
        e2.reserve(e.size() - 1);
        for (size_t k = 0; k < e.size(); ++k)
            if (static_cast<int>(k) != var) e2.push_back(e[k]);
        r.set_coef(e2, c);
    }
    return r;
}

RPolyN RPolyN::homogeneous_part(int degree) const {
    RPolyN r(nvars_);
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int k : e) t += k;
        if (t == degree) r.set_coef(e, c);
    }
    return r;
}

std::string RPolyN::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names = "abcd";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) os << "*" << names[k] << "^" << e[k];
    }
    return os.str();
}

// ------------------------------------------------------- homogenization

HomLinearQuat homogenize_11(const QPoly2& a) {
    auto [du, dv] = a.bidegree();
    if (du > 1 || dv > 1)
        fail(errc::bidegree_too_high, "homogenize_11 needs bidegree at most (1,1)");
    return HomLinearQuat{a.coef(1, 0), a.coef(0, 1), a.coef(1, 1), a.coef(0, 0)};
}

QPoly2 dehomogenize_11(const HomLinearQuat& h) {
    QPoly2 p;
    p.set_coef(1, 0, h.cu);
    p.set_coef(0, 1, h.cv);
    p.set_coef(1, 1, h.cw);
    p.set_coef(0, 0, h.cs);
    return p;
}

QPoly2 subst_quat(const RPolyN& f, int var, const Quat& q) {
    if (f.nvars() != 2) fail(errc::domain_violation, "subst_quat expects two variables");
    if (var != 0 && var != 1) fail(errc::domain_violation, "subst_quat variable out of range");
    QPoly2 out;
    for (const auto& [e, c] : f.terms()) {
        Quat qp = Quat::one();
        for (int t = 0; t < e[static_cast<size_t>(var)]; ++t) qp = qp * q;
        int keep = e[static_cast<size_t>(1 - var)];
        // surviving variable keeps its original slot
        int du = (var == 1) ? keep : 0;
        int dv = (var == 0) ? keep : 0;
        out.set_coef(du, dv, out.coef(du, dv) + qp * c);
    }
    return out;
}

std::optional<Separation> separable_test(const RPolyN& f) {
    if (f.nvars() != 2) fail(errc::domain_violation, "separable_test expects two variables");
    if (f.is_zero()) fail(errc::domain_violation, "separable_test on the zero polynomial");

    int du = f.degree_in(0), dv = f.degree_in(1);
    std::vector<std::vector<Rat>> m(static_cast<size_t>(du + 1),
                                    std::vector<Rat>(static_cast<size_t>(dv + 1), Rat(0)));
    for (const auto& [e, c] : f.terms()) m[static_cast<size_t>(e[0])][static_cast<size_t>(e[1])] = c;

    if (rank_exact(m) != 1) return std::nullopt;

    // Rank one: every column is a multiple of the pivot column. Normalize
    // P to be monic in u, then read R off the row of P's leading entry.
    size_t pivot_col = 0;
    bool found = false;
    for (size_t j = 0; j <= static_cast<size_t>(dv) && !found; ++j)
        for (size_t i = 0; i <= static_cast<size_t>(du); ++i)
            if (!m[i][j].is_zero()) {
                pivot_col = j;
                found = true;
                break;
            }

    int plead = -1;
    for (int i = du; i >= 0; --i)
        if (!m[static_cast<size_t>(i)][pivot_col].is_zero()) {
            plead = i;
            break;
        }

    Rat lead = m[static_cast<size_t>(plead)][pivot_col];
    Separation sep{RPolyN(2), RPolyN(2)};
    for (int i = 0; i <= du; ++i)
        sep.p_u.set_coef({i, 0}, m[static_cast<size_t>(i)][pivot_col] / lead);
    for (int j = 0; j <= dv; ++j)
        sep.r_v.set_coef({0, j}, m[static_cast<size_t>(plead)][static_cast<size_t>(j)]);

    if (sep.p_u * sep.r_v != f) return std::nullopt;  // rank-one but inconsistent; cannot happen
    return sep;
}

QPoly2 from_components(const RPolyN& x1, const RPolyN& x2, const RPolyN& x3, const RPolyN& x4) {
    QPoly2 out;
    const RPolyN* xs[4] = {&x1, &x2, &x3, &x4};
    for (int comp = 0; comp < 4; ++comp) {
        if (xs[comp]->nvars() != 2) fail(errc::domain_violation, "components must be bivariate");
        for (const auto& [e, c] : xs[comp]->terms()) {
            Quat cur = out.coef(e[0], e[1]);
            switch (comp) {
                case 0: cur.re += c; break;
                case 1: cur.x += c; break;
                case 2: cur.y += c; break;
                case 3: cur.z += c; break;
            }
            out.set_coef(e[0], e[1], cur);
        }
    }
    return out;
}

std::array<RPolyN, 4> to_components(const QPoly2& q) {
    std::array<RPolyN, 4> out{RPolyN(2), RPolyN(2), RPolyN(2), RPolyN(2)};
    for (const auto& [m, c] : q.terms()) {
        out[0].set_coef({m.du, m.dv}, c.re);
        out[1].set_coef({m.du, m.dv}, c.x);
        out[2].set_coef({m.du, m.dv}, c.y);
        out[3].set_coef({m.du, m.dv}, c.z);
    }
    return out;
}

} // namespace bicircle
