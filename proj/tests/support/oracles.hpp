#pragma once

// Independent reference computations used to validate the library.

#include <cstdint>
#include <vector>

#include "lcann/ext.hpp"
#include "lcann/monomial_ideal.hpp"
#include "lcann/polynomial.hpp"

namespace lcann::testing {

/// Brute-force D-closure: saturates the V-span of gens under every d_i^[t]
/// and under multiplication by x_i within degree <= the largest generator
/// degree, then reads off the smallest pi-power among constants in the span.
/// Returns -1 when the span contains no nonzero constant.
int dsub_closure_oracle(const std::vector<DvrPoly>& gens);

/// Checks (I : J) against direct divisibility on every monomial of degree
/// at most max_degree.
bool colon_matches_divisibility(const MonomialIdeal& I, const MonomialIdeal& J, const MonomialIdeal& colon,
                                int max_degree);

/// dim over F_p of Ext^j_{F_p[x]}(F_p[x]/I, F_p[x])_alpha, obtained from the
/// integral strand cohomology by universal coefficients.
std::size_t ext_dim_mod_p(ExtCalculator& calc, int j, const MultiIndex& alpha, std::uint64_t p);

/// The same dimension through local duality and Hochster's formula:
/// dim H^{n-j}_m(k[Δ])_{-alpha-1}. Requires I squarefree and alpha >= -1.
std::size_t ext_dim_by_duality(const MonomialIdeal& ideal, int j, const MultiIndex& alpha, std::uint64_t p);

}  // namespace lcann::testing
