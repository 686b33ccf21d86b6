#pragma once

// Sparse multivariate polynomials with exact rational coefficients over the
// variables X0, X1, X2. Affine polynomials (nvars == 2) only use X1 and X2;
// homogeneous forms (nvars == 3) use all three.

#include "polars/interval.hpp"
#include "polars/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polars {

struct Monomial {
    std::array<unsigned, 3> exps{};  // exponents of X0, X1, X2

    unsigned degree() const { return exps[0] + exps[1] + exps[2]; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, largest first. Ties on degree are broken by
/// the X1 exponent, then X2, then X0, so X1^2 + X2^2 - X0^2 prints in that order.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        if (a.exps[1] != b.exps[1]) return a.exps[1] > b.exps[1];
        if (a.exps[2] != b.exps[2]) return a.exps[2] > b.exps[2];
        return a.exps[0] > b.exps[0];
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    explicit Polynomial(int nvars);

    static Polynomial constant(const Rational& c, int nvars = 2);
    /// X_index as a polynomial; index 0 forces nvars == 3.
    static Polynomial variable(int index, int nvars = 2);
    static Polynomial term(const Monomial& m, const Rational& c, int nvars = 2);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;
    /// Number of variables among X0, X1, X2 that actually occur.
    std::vector<int> used_variables() const;

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    /// Adds c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    /// Same polynomial viewed with three variables (X0 may then be used).
    Polynomial as_projective() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Evaluates at a point given in the polynomial's own variables:
    /// (x1, x2) when nvars == 2, (x0, x1, x2) when nvars == 3.
    template <class T>
    T evaluate(std::span<const T> point) const;

private:
    int slot(int var) const { return nvars_ == 3 ? var : var - 1; }

    int nvars_ = 2;
    TermMap terms_;
};

Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial pow(const Polynomial& p, unsigned k);
/// Formal partial derivative in X_var (var in {0, 1, 2}).
Polynomial partial(const Polynomial& p, int var);

/// X0-homogenization of an affine polynomial.
Polynomial homogenize(const Polynomial& p);
/// Sets X0 = 1. Throws std::invalid_argument unless p is homogeneous.
Polynomial dehomogenize(const Polynomial& p);
/// Sets X0 = 1 without the homogeneity requirement.
Polynomial restrict_affine(const Polynomial& p);

/// Substitutes X1 -> X1 + c1, X2 -> X2 + c2 in an affine polynomial.
Polynomial translate(const Polynomial& p, const Rational& c1, const Rational& c2);

/// Multiplies by the positive rational that makes the coefficients coprime integers
/// (leading coefficient sign kept). Same zero set.
Polynomial primitive_part(const Polynomial& p);

Rational power(const Rational& x, unsigned k);

Rational eval_rat(const Polynomial& p, std::span<const Rational> point);
Interval eval_interval(const Polynomial& p, std::span<const Interval> box);

std::string to_string(const Polynomial& p);

// ---------------------------------------------------------------------------

template <class T>
T Polynomial::evaluate(std::span<const T> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point arity does not match polynomial");
    std::array<std::vector<T>, 3> powers;
    for (const auto& [m, c] : terms_) {
        for (int v = 0; v < 3; ++v) {
            if (m.exps[v] == 0) continue;
            auto& table = powers[v];
            if (table.size() <= m.exps[v]) {
                const T& x = point[slot(v)];
                while (table.size() <= m.exps[v]) table.push_back(power(x, static_cast<unsigned>(table.size())));
            }
        }
    }
    T acc(Rational(0));
    for (const auto& [m, c] : terms_) {
        T t(c);
        for (int v = 0; v < 3; ++v)
            if (m.exps[v] != 0) t = t * powers[v][m.exps[v]];
        acc = acc + t;
    }
    return acc;
}

inline Interval power(const Interval& x, unsigned k) { return ipow(x, k); }

}  // namespace polars
