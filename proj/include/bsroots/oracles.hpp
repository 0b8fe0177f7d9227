#pragma once

// Slow, independent reference implementations used by the tests and the
// acceptance suite. Each uses a different algorithm from the kernel it checks.

#include "bsroots/ideal.hpp"

#include <random>
#include <set>
#include <vector>

namespace bsroots::oracle {

/// τ by depth-first enumeration of β ∈ ℕ^r.
Integer tau_enumerate(const MonomialIdeal& a, const IntVector& w);

/// Ordinary facet functionals from hyperplanes through n-element subsets of
/// {generators} ∪ {recession directions}, sorted and deduplicated.
std::vector<RatVector> facets_bruteforce(const MonomialIdeal& a);

/// Variables i for which {x_i = 0} cuts out a facet.
std::vector<std::size_t> coordinate_facets_bruteforce(const MonomialIdeal& a);

/// lcm of square minors, each by Laplace expansion.
Integer integrality_modulus_laplace(const MonomialIdeal& a);

/// Values of all tuples (A, B, α, β) in the box that pass condition_check
/// and have a constant Σ, by literal enumeration.
std::set<Rational> roots_gamma_literal(const MonomialIdeal& a, long alpha_max, long beta_min);

/// Intersection of the components equals J on the box [0, side]ⁿ.
bool decomposition_matches(const MonomialIdeal& j, const std::vector<IrreducibleComponent>& comps, long side);

/// A proper ideal with n ∈ [1, max_vars], r ∈ [1, max_gens], entries in [0, max_exp].
MonomialIdeal random_ideal(std::mt19937& rng, std::size_t max_vars, std::size_t max_gens, long max_exp);

}  // namespace bsroots::oracle
