#pragma once

#include "bsroots/ideal.hpp"
#include "bsroots/optim.hpp"

#include <map>
#include <optional>
#include <vector>

namespace bsroots {

/// The affine subspace {u_j = α_j (j ∈ A), ℓ_i(u) = β_i (i ∈ B)} of ℚ^r on
/// which Σu_j takes the constant `value`. A indexes generators, B variables.
struct GammaComponent {
    std::vector<std::size_t> gens;  // A
    std::vector<std::size_t> vars;  // B
    IntVector alpha;                // α_j ≥ 0, aligned with gens
    IntVector beta;                 // β_i ≤ −1, aligned with vars
    Rational value;
};

/// True iff every integer c with c_j ≥ −α_j (j ∈ A) and ℓ_i(c) ≤ −β_i − 1
/// (i ∈ B) has Σc ≤ 0. Decided by a ray test, an LP bound, and an integer
/// program over the lineality-free part with a box taken from the vertices
/// and rays of the region.
bool condition_check(const MonomialIdeal& a, const std::vector<std::size_t>& gens, const IntVector& alpha,
                     const std::vector<std::size_t>& vars, const IntVector& beta);

/// Σu on the subspace, when it is nonempty and Σ is constant on it.
std::optional<Rational> gamma_value(const MonomialIdeal& a, const std::vector<std::size_t>& gens,
                                    const IntVector& alpha, const std::vector<std::size_t>& vars,
                                    const IntVector& beta);

struct GammaOptions {
    std::optional<Integer> alpha_max;  // default n·(max exponent)
    std::optional<Integer> beta_min;   // default −n·(max exponent) − n
    bool parallel = true;
};

struct GammaReport {
    std::vector<Rational> roots;  // distinct, in decreasing order
    std::map<Rational, GammaComponent> witnesses;
    Integer alpha_max;
    Integer beta_min;
};

/// Values of all components with α ∈ [0, alpha_max]^A and β ∈ [beta_min, −1]^B
/// that pass condition_check.
///
/// Each passing tuple can be completed to one whose subspace is a single
/// point without changing its value, and for those the condition says the
/// point maximizes Σ over its coset of ℤ^r inside {v_A ≥ 0, ℓ_B(v) ≤ −1}.
/// The enumeration therefore runs over pairs (A, B) of full rank and the
/// finitely many cosets compatible with integral α and β.
GammaReport roots_gamma(const MonomialIdeal& a, const GammaOptions& opts = {});

/// max obj·y over integer y with rows·y ≥ rhs, where rows has full column
/// rank. The search box comes from the vertices and extreme rays of the
/// region. Throws InconclusiveError when the relaxation is unbounded.
OptResult pointed_ilp_max(const RatMatrix& rows, const RatVector& rhs, const RatVector& obj);

}  // namespace bsroots
