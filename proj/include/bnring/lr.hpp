#pragma once

#include <map>

#include "bnring/partition.hpp"

namespace bnring {

/// Multiplicity of s_gamma in s_alpha * s_beta, by enumeration of
/// Littlewood-Richardson skew tableaux of shape gamma/alpha and content beta.
/// Results are memoized in a process-wide synchronized cache.
Integer lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// Every gamma with nonzero coefficient, with its multiplicity.
std::map<Partition, Integer> lr_expand_product(const Partition& alpha, const Partition& beta);

/// Default degree bound of lr_oracle.
inline constexpr int kOracleDefaultBound = 12;

/// Independent check of lr_coefficient.  Expands s_alpha * s_beta in
/// deg(gamma) variables through monomial coefficients (Kostka numbers, i.e.
/// semistandard tableau counts) and peels off Schur functions in decreasing
/// lexicographic order of their leading monomial.  Never touches the LR
/// tableau code.  Throws Unsupported ("oracle out of range") when
/// deg(gamma) exceeds `bound`.
Integer lr_oracle(const Partition& alpha, const Partition& beta, const Partition& gamma,
                  int bound = kOracleDefaultBound);

/// Drops every memoized coefficient.  Results never depend on cache state.
void clear_lr_cache();

} // namespace bnring
