#pragma once

#include "polars/rational.hpp"

#include <optional>
#include <vector>

namespace polars {

/// LLL reduction (delta = 3/4) of the rows of an integer basis, in place.
void lll_reduce(std::vector<std::vector<Integer>>& basis);

/// Integer vector c, not all zero, with |c_i| <= max_coeff and sum c_i v_i close to zero,
/// found by reducing the lattice spanned by e_i + round(2^scale_bits * v_i) e_n.
/// Only a candidate: callers verify the relation exactly.
std::optional<std::vector<Integer>> integer_relation(const std::vector<Rational>& v, unsigned long scale_bits,
                                                     const Integer& max_coeff);

}  // namespace polars
