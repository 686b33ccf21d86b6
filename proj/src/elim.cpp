#include "polars/elim.hpp"

#include "polars/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace polars::elim {

namespace {

using modp::u64;

struct Row {
    int which;  // 0: f, 1: g
    int shift;  // row holds v^shift * poly
};

int deg_u(const IntPoly& p) { return upoly::degree(p); }

BiPoly finish(BiPoly b) {
    while (!b.coeffs.empty() && b.coeffs.back().empty()) b.coeffs.pop_back();
    b.total_degree = -1;
    for (std::size_t k = 0; k < b.coeffs.size(); ++k)
        if (!b.coeffs[k].empty()) b.total_degree = std::max(b.total_degree, static_cast<int>(k) + deg_u(b.coeffs[k]));
    return b;
}

BiPoly to_bipoly_scaled(const Polynomial& p, int other, int eliminated, Rational& factor) {
    if (p.is_zero()) {
        factor = 1;
        return {};
    }
    for (int v = 0; v < 3; ++v)
        if (v != other && v != eliminated && p.degree_in(v) > 0)
            throw std::invalid_argument("elimination expects a polynomial in two variables");
    Polynomial q = primitive_part(p);
    factor = q.terms().begin()->second / p.coefficient(q.terms().begin()->first);
    BiPoly b;
    b.coeffs.resize(q.degree_in(eliminated) + 1);
    for (const auto& [m, c] : q.terms()) {
        auto& col = b.coeffs[m.exps[eliminated]];
        const unsigned e = m.exps[other];
        if (col.size() <= e) col.resize(e + 1);
        col[e] = c.get_num();
    }
    for (auto& c : b.coeffs) upoly::trim(c);
    return finish(std::move(b));
}

u64 horner_mod(const modp::PolyP& c, u64 x, u64 p) {
    u64 r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = modp::addmod(modp::mulmod(r, x, p), c[i], p);
    return r;
}

u64 det_mod(std::vector<std::vector<u64>>& m, u64 p) {
    const std::size_t n = m.size();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = p - det;
            if (det == p) det = 0;
        }
        const u64 pv = m[col][col];
        det = modp::mulmod(det, pv, p);
        const u64 inv = modp::invmod(pv, p);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const u64 factor = modp::mulmod(m[r][col], inv, p);
            for (std::size_t c = col; c < n; ++c)
                if (m[col][c] != 0) m[r][c] = modp::submod(m[r][c], modp::mulmod(factor, m[col][c], p), p);
        }
    }
    return det;
}

// Coefficients of the polynomial of degree < n taking values[i] at x = i.
std::vector<u64> interpolate_consecutive(std::vector<u64> c, u64 p) {
    const std::size_t n = c.size();
    std::vector<u64> inv(n, 1);
    for (std::size_t k = 1; k < n; ++k) inv[k] = modp::invmod(k, p);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t j = n - 1; j >= k; --j) {
            c[j] = modp::mulmod(modp::submod(c[j], c[j - 1], p), inv[k], p);
            if (j == k) break;
        }
    std::vector<u64> coeffs(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // coeffs <- coeffs * (x - k) + c[k]
        for (std::size_t i = n - 1; i > 0; --i)
            coeffs[i] = modp::submod(coeffs[i - 1], modp::mulmod(coeffs[i], k % p, p), p);
        coeffs[0] = modp::submod(0, modp::mulmod(coeffs[0], k % p, p), p);
        coeffs[0] = modp::addmod(coeffs[0], c[k], p);
    }
    return coeffs;
}

/// Determinant, as a polynomial in u, of the matrix whose row r is v^shift * poly restricted
/// to the listed column powers.
IntPoly determinant_poly(const BiPoly& f, const BiPoly& g, const std::vector<Row>& rows, const std::vector<int>& cols) {
    const std::size_t n = rows.size();
    if (cols.size() != n) throw std::logic_error("determinant_poly: matrix not square");
    if (n == 0) return {Integer(1)};
    const BiPoly* polys[2] = {&f, &g};

    long weighted = 0, plain = 0;
    Integer bound = 1;
    const Integer norms[2] = {norm1(f), norm1(g)};
    for (const auto& r : rows) {
        const BiPoly& b = *polys[r.which];
        weighted += b.total_degree + r.shift;
        int mx = 0;
        for (const auto& c : b.coeffs) mx = std::max(mx, deg_u(c));
        plain += mx;
        bound *= norms[r.which];
    }
    for (int c : cols) weighted -= c;
    const long dbound = std::max(0L, std::min(weighted, plain));
    const std::size_t npoints = static_cast<std::size_t>(dbound) + 1;
    const Integer target = 2 * bound + 1;

    modp::CrtAccumulator acc;
    std::vector<std::vector<u64>> mat(n, std::vector<u64>(n));
    for (std::size_t pi = 0; acc.modulus() <= target; ++pi) {
        const u64 p = modp::prime(pi);
        std::vector<modp::PolyP> red[2];
        for (int w = 0; w < 2; ++w)
            for (const auto& c : polys[w]->coeffs) {
                modp::PolyP r(c.size());
                for (std::size_t i = 0; i < c.size(); ++i) r[i] = modp::reduce(c[i], p);
                red[w].push_back(std::move(r));
            }
        std::vector<u64> values(npoints);
        std::vector<u64> at[2];
        for (std::size_t a = 0; a < npoints; ++a) {
            for (int w = 0; w < 2; ++w) {
                at[w].resize(red[w].size());
                for (std::size_t k = 0; k < red[w].size(); ++k) at[w][k] = horner_mod(red[w][k], a, p);
            }
            for (std::size_t r = 0; r < n; ++r) {
                const auto& coeffs = at[rows[r].which];
                for (std::size_t c = 0; c < n; ++c) {
                    const int k = cols[c] - rows[r].shift;
                    mat[r][c] = (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : 0;
                }
            }
            values[a] = det_mod(mat, p);
        }
        acc.add(interpolate_consecutive(std::move(values), p), p);
    }
    IntPoly out = acc.symmetric();
    upoly::trim(out);
    return out;
}

}  // namespace

BiPoly to_bipoly(const Polynomial& p, int other, int eliminated) {
    Rational factor;
    return to_bipoly_scaled(p, other, eliminated, factor);
}

Polynomial from_bipoly(const BiPoly& b, int other, int eliminated) {
    Polynomial r((other == 0 || eliminated == 0) ? 3 : 2);
    for (std::size_t k = 0; k < b.coeffs.size(); ++k)
        for (std::size_t i = 0; i < b.coeffs[k].size(); ++i) {
            Monomial m;
            m.exps[eliminated] = static_cast<unsigned>(k);
            m.exps[other] = static_cast<unsigned>(i);
            r.add_term(m, Rational(b.coeffs[k][i]));
        }
    return r;
}

BiPoly shear(const BiPoly& p, long lambda) {
    if (lambda == 0) return p;
    // u^i v^k -> (u + lambda v)^i v^k = sum_j C(i,j) lambda^j u^(i-j) v^(k+j)
    const int dmax = p.total_degree;
    BiPoly r;
    r.coeffs.assign(static_cast<std::size_t>(std::max(dmax, 0)) + 1, IntPoly{});
    for (auto& c : r.coeffs) c.assign(static_cast<std::size_t>(std::max(dmax, 0)) + 1, Integer(0));
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        for (std::size_t i = 0; i < p.coeffs[k].size(); ++i) {
            if (sgn(p.coeffs[k][i]) == 0) continue;
            Integer binom = 1;
            Integer lam_pow = 1;
            for (std::size_t j = 0; j <= i; ++j) {
                // term C(i,j) lambda^j u^(i-j) v^(k+j)
                mpz_addmul(r.coeffs[k + j][i - j].get_mpz_t(), p.coeffs[k][i].get_mpz_t(), Integer(binom * lam_pow).get_mpz_t());
                binom = binom * static_cast<unsigned long>(i - j) / static_cast<unsigned long>(j + 1);
                lam_pow *= lambda;
            }
        }
    for (auto& c : r.coeffs) upoly::trim(c);
    return finish(std::move(r));
}

Integer norm1(const BiPoly& p) {
    Integer s = 0;
    for (const auto& c : p.coeffs)
        for (const auto& x : c) s += abs(x);
    return s;
}

IntPoly resultant(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
    const int m = f.degree_v(), n = g.degree_v();
    if (m == 0 && n == 0) return {Integer(1)};
    std::vector<Row> rows;
    for (int s = n - 1; s >= 0; --s) rows.push_back({0, s});
    for (int s = m - 1; s >= 0; --s) rows.push_back({1, s});
    std::vector<int> cols;
    for (int c = m + n - 1; c >= 0; --c) cols.push_back(c);
    return determinant_poly(f, g, rows, cols);
}

std::vector<IntPoly> subresultant(const BiPoly& f_in, const BiPoly& g_in, int k) {
    const BiPoly* f = &f_in;
    const BiPoly* g = &g_in;
    if (f->degree_v() < g->degree_v()) std::swap(f, g);
    const int m = f->degree_v(), n = g->degree_v();
    if (n < 0 || k < 0) throw std::invalid_argument("subresultant: bad degree");
    if (k >= n) {
        std::vector<IntPoly> out(g->coeffs.begin(), g->coeffs.end());
        out.resize(static_cast<std::size_t>(k) + 1);
        return out;
    }
    std::vector<Row> rows;
    for (int s = n - k - 1; s >= 0; --s) rows.push_back({0, s});
    for (int s = m - k - 1; s >= 0; --s) rows.push_back({1, s});
    std::vector<int> cols;
    for (int c = m + n - k - 1; c >= k + 1; --c) cols.push_back(c);
    cols.push_back(0);
    std::vector<IntPoly> out(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        cols.back() = j;
        out[j] = determinant_poly(*f, *g, rows, cols);
    }
    return out;
}

Subresultant1 subresultant1(const BiPoly& f, const BiPoly& g) {
    if (std::min(f.degree_v(), g.degree_v()) < 1) throw std::invalid_argument("subresultant1 needs positive degree in v");
    auto s = subresultant(f, g, 1);
    return {s[1], s[0]};
}

}  // namespace polars::elim

namespace polars {

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var) {
    if (var < 0 || var > 2) throw std::invalid_argument("resultant: variable index out of range");
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
    if (p.degree_in(var) < 1 || q.degree_in(var) < 1)
        throw std::invalid_argument("resultant needs positive degree in the eliminated variable");
    int other = -1;
    for (const Polynomial* x : {&p, &q})
        for (int v : x->used_variables())
            if (v != var) {
                if (other >= 0 && other != v) throw std::invalid_argument("resultant supports one remaining variable");
                other = v;
            }
    if (other < 0) other = var == 1 ? 2 : 1;
    Rational fp, fq;
    elim::BiPoly bp = elim::to_bipoly_scaled(p, other, var, fp);
    elim::BiPoly bq = elim::to_bipoly_scaled(q, other, var, fq);
    upoly::IntPoly r = elim::resultant(bp, bq);
    // bp = fp * p, so Res(p, q) = Res(bp, bq) / (fp^deg q * fq^deg p).
    Rational denom = power(fp, static_cast<unsigned>(q.degree_in(var))) * power(fq, static_cast<unsigned>(p.degree_in(var)));
    Polynomial out = upoly::to_polynomial(r, other) * (1 / denom);
    if (p.nvars() == 3 || q.nvars() == 3) out = out.as_projective();
    return out;
}

}  // namespace polars
