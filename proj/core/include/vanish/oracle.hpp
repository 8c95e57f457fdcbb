#ifndef VANISH_ORACLE_HPP
#define VANISH_ORACLE_HPP

#include <cstdint>

#include "vanish/polynomial.hpp"

namespace vanish::oracle {

// Ground truth by raw enumeration. Nothing here may depend on the ideal,
// product, or construct modules: these routines are the independent checks
// those modules are tested against. Budgets fail hard (BudgetError) rather
// than sampling, since a sampled oracle is not an oracle.

inline constexpr std::uint64_t kDefaultElementBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// True iff f evaluates to zero at every element of its ring, by evaluating
/// at all of them. Throws BudgetError if the ring has more elements than the
/// budget allows.
bool eval_all_zero(const Polynomial& f,
                   std::uint64_t element_budget = kDefaultElementBudget);

/// Number of distinct functions Z_n -> Z_n induced by the n^(dmax+1)
/// polynomials of degree <= dmax, by enumerating all of them (coefficient
/// vectors in lexicographic order, constant term fastest).
Integer brute_count_functions(const Integer& n, std::size_t dmax,
                              std::uint64_t enumeration_budget = kDefaultEnumerationBudget);

/// Smallest d >= 1 such that some nonzero polynomial of degree d over Z_n
/// vanishes everywhere, by exhaustive search in increasing degree.
std::size_t brute_min_vanishing_degree(const Integer& n,
                                       std::uint64_t enumeration_budget = kDefaultEnumerationBudget);

}  // namespace vanish::oracle

#endif  // VANISH_ORACLE_HPP
