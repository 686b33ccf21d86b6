#include "polars/projective.hpp"

namespace polars {

namespace {

Triple canonical_triple(const Triple& t, const char* what) {
    for (int i = 0; i < 3; ++i)
        if (sgn(t[i]) != 0) {
            Triple r;
            for (int j = 0; j < 3; ++j) r[j] = t[j] / t[i];
            return r;
        }
    throw std::invalid_argument(std::string(what) + " with all coordinates zero");
}

std::string triple_string(const Triple& t, const char* sep) {
    return "(" + to_string(t[0]) + sep + to_string(t[1]) + sep + to_string(t[2]) + ")";
}

Rational det3(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Triple mul(const Matrix3& m, const Triple& v) {
    Triple r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

Monomial mono(int i, int j) {
    Monomial m;
    ++m.exps[i];
    ++m.exps[j];
    return m;
}

}  // namespace

ProjPoint::ProjPoint(Rational a0, Rational a1, Rational a2) : c{std::move(a0), std::move(a1), std::move(a2)} {
    canonical_triple(c, "ProjPoint");
}
ProjPoint::ProjPoint(const Triple& t) : c(t) { canonical_triple(c, "ProjPoint"); }
ProjPoint ProjPoint::canonical() const { return ProjPoint(canonical_triple(c, "ProjPoint")); }
std::string ProjPoint::to_string() const { return triple_string(canonical().c, " : "); }
bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.canonical().c == q.canonical().c; }

ProjLine::ProjLine(Rational b0, Rational b1, Rational b2) : c{std::move(b0), std::move(b1), std::move(b2)} {
    canonical_triple(c, "ProjLine");
}
ProjLine::ProjLine(const Triple& t) : c(t) { canonical_triple(c, "ProjLine"); }
ProjLine ProjLine::canonical() const { return ProjLine(canonical_triple(c, "ProjLine")); }
std::string ProjLine::to_string() const { return "V" + triple_string(canonical().c, " : "); }
bool operator==(const ProjLine& p, const ProjLine& q) { return p.canonical().c == q.canonical().c; }

bool incident(const ProjPoint& p, const ProjLine& l) {
    return sgn(p.c[0] * l.c[0] + p.c[1] * l.c[1] + p.c[2] * l.c[2]) == 0;
}

Flag2D::Flag2D(const ProjPoint& p) : point(p) {
    if (!incident(point, line_at_infinity)) throw std::invalid_argument("flag point must lie on the line at infinity");
}

Quadric Quadric::from_polynomial(const Polynomial& q_in) {
    Polynomial q = q_in.nvars() == 3 && q_in.is_homogeneous() ? q_in : homogenize(q_in);
    if (q.degree() != 2 || !q.is_homogeneous()) throw std::invalid_argument("quadric must be a quadratic form");
    Quadric r;
    r.q_ = q;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Rational c = q.coefficient(mono(i, j));
            r.sym_[i][j] = i == j ? c : Rational(c / 2);
        }
    if (sgn(r.det()) == 0) throw std::invalid_argument("quadric is degenerate");
    return r;
}

Quadric Quadric::standard() {
    Polynomial q(3);
    for (int i = 0; i < 3; ++i) q.add_term(mono(i, i), 1);
    return from_polynomial(q);
}

Rational Quadric::det() const { return det3(sym_); }

bool Quadric::distance_like() const {
    return sgn(sym_[1][1]) > 0 && sgn(sym_[1][1] * sym_[2][2] - sym_[1][2] * sym_[2][1]) > 0;
}

Polynomial projective_curve(const Polynomial& f) {
    if (f.nvars() == 3 && f.is_homogeneous()) return f;
    return homogenize(f);
}

Polynomial classical_polar(const Polynomial& f, const ProjPoint& a) {
    if (f.nvars() != 3 || !f.is_homogeneous()) throw std::invalid_argument("classical_polar expects a homogeneous polynomial");
    if (f.degree() < 2) throw std::invalid_argument("classical_polar expects degree at least 2");
    Polynomial r(3);
    for (int i = 0; i < 3; ++i)
        if (sgn(a.c[i]) != 0) r += a.c[i] * partial(f, i);
    if (r.is_zero()) throw DegeneratePolarError("the polar curve vanishes identically");
    return r;
}

ProjLine polar_line(const Quadric& q, const ProjPoint& a) {
    Triple t = mul(q.sym(), a.c);
    for (auto& x : t) x *= 2;
    return ProjLine(t);
}

ProjPoint polar_point(const Quadric& q, const ProjLine& l) {
    // adjugate is sym^-1 up to the scalar det
    const Matrix3& s = q.sym();
    Matrix3 adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[i][j] = s[r0][c0] * s[r1][c1] - s[r0][c1] * s[r1][c0];
        }
    return ProjPoint(mul(adj, l.c));
}

Polynomial reciprocal_polar(const Polynomial& f, const Quadric& q, const ProjPoint& a) {
    if (f.nvars() != 3 || !f.is_homogeneous()) throw std::invalid_argument("reciprocal_polar expects a homogeneous polynomial");
    std::array<Polynomial, 3> df, dq;
    for (int i = 0; i < 3; ++i) {
        df[i] = partial(f, i).as_projective();
        dq[i] = partial(q.polynomial(), i).as_projective();
    }
    Polynomial r(3);
    for (int i = 0; i < 3; ++i) {
        if (sgn(a.c[i]) == 0) continue;
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        r += a.c[i] * (df[j] * dq[k] - df[k] * dq[j]);
    }
    return r;
}

PolyMatrix2 reciprocal_minor_matrix(const Polynomial& f, const Polynomial& q) {
    if (f.is_zero()) throw std::invalid_argument("reciprocal_minor_matrix of the zero polynomial");
    return {{{partial(f, 1), partial(f, 2)}, {partial(q, 1), partial(q, 2)}}};
}

Polynomial minor(const PolyMatrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Quadric quadric_for_center(const ProjPoint& a_in) {
    if (!a_in.is_affine()) throw std::invalid_argument("quadric_for_center: centre is at infinity");
    const ProjPoint a = a_in.canonical();
    Polynomial q(3);
    q.add_term(mono(0, 0), 1 + a.c[1] * a.c[1] + a.c[2] * a.c[2]);
    for (int i = 1; i <= 2; ++i) {
        q.add_term(mono(0, i), -2 * a.c[i]);
        q.add_term(mono(i, i), 1);
    }
    return Quadric::from_polynomial(q);
}

}  // namespace polars
