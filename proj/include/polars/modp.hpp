#pragma once

// Word-size prime field helpers used by the multi-modular resultant and gcd.

#include "polars/rational.hpp"

#include <cstdint>
#include <vector>

namespace polars::modp {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;  // coefficients low to high, trimmed

inline u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 invmod(u64 a, u64 p);

/// The i-th prime below 2^62, in decreasing order. Deterministic.
u64 prime(std::size_t i);

u64 reduce(const Integer& z, u64 p);

void trim(PolyP& a);
/// Monic gcd over GF(p).
PolyP gcd(PolyP a, PolyP b, u64 p);

/// Incremental Chinese remaindering of integer vectors (Garner, one prime at a time).
class CrtAccumulator {
public:
    void reset() {
        modulus_ = 1;
        values_.clear();
    }
    /// residues.size() must be constant across calls.
    void add(const std::vector<u64>& residues, u64 p);
    const Integer& modulus() const { return modulus_; }
    /// Values in the symmetric range (-M/2, M/2].
    std::vector<Integer> symmetric() const;

private:
    Integer modulus_ = 1;
    std::vector<Integer> values_;
};

}  // namespace polars::modp
