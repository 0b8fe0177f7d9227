#pragma once

#include "bsroots/geometry.hpp"
#include "bsroots/ideal.hpp"

#include <map>
#include <vector>

namespace bsroots {

/// max Σβ over β ∈ ℕ^r with ℓ_i(β) ≤ w_i for every variable i.
Integer tau(const MonomialIdeal& a, const IntVector& w);

/// As tau, with constraints only for the variables in `support`; bounds[k]
/// belongs to support[k]. Throws UnboundedInvariantError when some generator
/// has no variable in the support.
Integer tau_partial(const MonomialIdeal& a, const std::vector<std::size_t>& support, const IntVector& bounds);

/// Rational relaxation of tau_partial, solved as a linear program.
Rational tau_q_partial(const MonomialIdeal& a, const std::vector<std::size_t>& support, const RatVector& bounds);

/// max{λ ≥ 0 : w ∈ λP}, read off the facets.
Rational tau_q(const MonomialIdeal& a, const RatVector& w);
Rational tau_q(const NewtonPolyhedron& p, const RatVector& w);

/// Same value as tau_q, computed by lp_max on the defining program.
Rational tau_q_lp(const MonomialIdeal& a, const RatVector& w);

/// ν^J_𝔞(q) = max over components (I, b) of J of tau_partial(I, q·b − 1).
/// Throws RadicalContainmentError unless 𝔞 ⊆ Rad(J).
Integer nu(const MonomialIdeal& a, const MonomialIdeal& j, const Integer& q);

/// lim ν(q)/q, the maximum over components of the rational optimum at b.
Rational f_threshold(const MonomialIdeal& a, const MonomialIdeal& j);

Rational lct(const MonomialIdeal& a);

/// τ_ℚ(b) for a positive integer vector b.
Rational jumping_number(const MonomialIdeal& a, const IntVector& b);

/// X^u ∈ 𝓘(𝔞^α): u + e lies in the interior of αP.
bool multiplier_ideal_membership(const MonomialIdeal& a, const Rational& alpha, const IntVector& u);

struct LawSample {
    Integer q;
    Integer nu;
};

/// ν(q) = slope·q + intercepts[q mod modulus] for every sampled q ≥ q_min.
struct QuasiLinearLaw {
    Integer modulus;
    Rational slope;
    std::map<long, Rational> intercepts;
    Integer q_min;
    std::map<long, std::vector<LawSample>> trace;
};

struct LawOptions {
    std::size_t runs = 3;
    std::size_t budget = 64;  // samples per residue
    bool parallel = true;
};

/// Samples q ≡ j (mod N) upward for each residue j and certifies the
/// intercept once it repeats `runs` times in a row. Throws BudgetExceededError
/// (with the trace as detail) when a residue does not settle.
QuasiLinearLaw quasi_linear_law(const MonomialIdeal& a, const MonomialIdeal& j, const LawOptions& opts = {});

struct Periodicity {
    std::vector<Integer> nu_values;    // ν(p^e) for e = 1..E+1
    std::vector<Integer> differences;  // ν(p^{e+1}) − p·ν(p^e) for e = 1..E
    std::size_t preperiod = 0;         // differences repeat from index preperiod on
    std::size_t period = 0;
};

/// Detects the smallest period P, and then the smallest preperiod s, such
/// that the differences repeat with period P from s on and the repeating tail
/// has at least max(2P, 3) entries. Throws BudgetExceededError otherwise.
Periodicity nu_periodicity(const MonomialIdeal& a, const MonomialIdeal& j, const Integer& p, std::size_t depth = 8);

/// The detection rule on its own, for an arbitrary sequence.
bool detect_period(const std::vector<Integer>& seq, std::size_t& preperiod, std::size_t& period);

}  // namespace bsroots
