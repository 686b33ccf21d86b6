#include "polars/lll.hpp"

#include <stdexcept>

namespace polars {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Gram-Schmidt of the basis; the dimension here is tiny so it is simply redone.
void gram_schmidt(const std::vector<std::vector<Integer>>& b, std::vector<std::vector<Rational>>& star,
                  std::vector<std::vector<Rational>>& mu, std::vector<Rational>& norms) {
    const std::size_t n = b.size();
    star.assign(n, {});
    mu.assign(n, std::vector<Rational>(n));
    norms.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        star[i].assign(b[i].begin(), b[i].end());
        std::vector<Rational> bi(b[i].begin(), b[i].end());
        for (std::size_t j = 0; j < i; ++j) {
            mu[i][j] = sgn(norms[j]) == 0 ? Rational(0) : Rational(dot(bi, star[j]) / norms[j]);
            for (std::size_t t = 0; t < star[i].size(); ++t) star[i][t] -= mu[i][j] * star[j][t];
        }
        norms[i] = dot(star[i], star[i]);
    }
}

Integer round_nearest(const Rational& x) {
    Integer r;
    Rational h = x + Rational(1, 2);
    mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    return r;
}

}  // namespace

void lll_reduce(std::vector<std::vector<Integer>>& b) {
    const std::size_t n = b.size();
    if (n < 2) return;
    const Rational delta(3, 4);
    std::vector<std::vector<Rational>> star, mu;
    std::vector<Rational> norms;
    gram_schmidt(b, star, mu, norms);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            Integer q = round_nearest(mu[k][j]);
            if (sgn(q) == 0) continue;
            for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
            gram_schmidt(b, star, mu, norms);
        }
        if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt(b, star, mu, norms);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
}

std::optional<std::vector<Integer>> integer_relation(const std::vector<Rational>& v, unsigned long scale_bits,
                                                     const Integer& max_coeff) {
    const std::size_t n = v.size();
    if (n < 2) throw std::invalid_argument("integer_relation needs at least two values");
    Rational scale(Integer(1) << scale_bits);
    std::vector<std::vector<Integer>> b(n, std::vector<Integer>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        b[i][i] = 1;
        b[i][n] = round_nearest(v[i] * scale);
    }
    lll_reduce(b);
    for (const auto& row : b) {
        std::vector<Integer> c(row.begin(), row.begin() + static_cast<long>(n));
        bool small = true, nonzero = false;
        for (const auto& x : c) {
            if (abs(x) > max_coeff) small = false;
            if (sgn(x) != 0) nonzero = true;
        }
        if (small && nonzero) return c;
    }
    return std::nullopt;
}

}  // namespace polars
