#include "polars/modp.hpp"

#include <stdexcept>

namespace polars::modp {

namespace {

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1U) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

constexpr std::size_t kPrimeCount = 1024;

const std::vector<u64>& prime_table() {
    static const std::vector<u64> table = [] {
        std::vector<u64> t;
        t.reserve(kPrimeCount);
        for (u64 n = (1ULL << 62) - 1; t.size() < kPrimeCount; n -= 2)
            if (is_prime(n)) t.push_back(n);
        return t;
    }();
    return table;
}

}  // namespace

u64 invmod(u64 a, u64 p) {
    // Extended Euclid on signed 128-bit to stay exact.
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a % p;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    if (t < 0) t += p;
    return static_cast<u64>(t);
}

u64 prime(std::size_t i) {
    const auto& t = prime_table();
    if (i >= t.size()) throw std::length_error("prime table exhausted");
    return t[i];
}

u64 reduce(const Integer& z, u64 p) {
    static_assert(sizeof(unsigned long) == 8, "unsigned long must be 64-bit");
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP gcd(PolyP a, PolyP b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        u64 inv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            u64 factor = mulmod(a.back(), inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = submod(a[shift + i], mulmod(factor, b[i], p), p);
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

void CrtAccumulator::add(const std::vector<u64>& residues, u64 p) {
    if (modulus_ == 1 && values_.empty()) {
        values_.resize(residues.size());
        for (std::size_t i = 0; i < residues.size(); ++i) values_[i] = static_cast<unsigned long>(residues[i]);
        modulus_ = static_cast<unsigned long>(p);
        return;
    }
    if (residues.size() != values_.size()) throw std::invalid_argument("CRT: residue vector length changed");
    u64 m_mod_p = reduce(modulus_, p);
    u64 m_inv = invmod(m_mod_p, p);
    Integer step;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        u64 cur = reduce(values_[i], p);
        u64 delta = mulmod(submod(residues[i], cur, p), m_inv, p);
        if (delta == 0) continue;
        mpz_addmul_ui(values_[i].get_mpz_t(), modulus_.get_mpz_t(), delta);
    }
    mpz_mul_ui(modulus_.get_mpz_t(), modulus_.get_mpz_t(), p);
}

std::vector<Integer> CrtAccumulator::symmetric() const {
    Integer half = modulus_ / 2;
    std::vector<Integer> out = values_;
    for (auto& v : out)
        if (v > half) v -= modulus_;
    return out;
}

}  // namespace polars::modp
