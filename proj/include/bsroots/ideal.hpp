#pragma once

#include "bsroots/linalg.hpp"

#include <cstdint>
#include <vector>

namespace bsroots {

/// Exponent vector u of the monomial X^u.
using Exponent = std::vector<std::int64_t>;

/// An ideal generated by monomials, stored as its minimal generating set.
///
/// Construction prunes duplicate and dominated generators; the survivors keep
/// the order in which they first appeared. Generator j is the a_j of the
/// linear forms ℓ_i(s) = Σ_j a_{i,j} s_j used throughout the library.
class MonomialIdeal {
public:
    MonomialIdeal(std::size_t nvars, std::vector<Exponent> generators);

    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const std::vector<Exponent>& generators() const noexcept { return gens_; }
    const Exponent& generator(std::size_t j) const { return gens_.at(j); }

    /// True when some generator is the zero vector.
    bool is_unit() const noexcept;

    /// Entry (i, j) is a_{i,j}: rows are variables, columns are generators.
    IntMatrix exponent_matrix() const;

    std::int64_t max_exponent() const noexcept;

    /// Set equality of minimal generators.
    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

private:
    std::size_t nvars_;
    std::vector<Exponent> gens_;
};

struct VariablePower {
    std::size_t var;
    std::int64_t exponent;
    friend bool operator==(const VariablePower&, const VariablePower&) = default;
};

/// (X_i^{b_i} : i ∈ I), with I sorted increasingly.
struct IrreducibleComponent {
    std::vector<VariablePower> powers;
    friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
};

/// The maximal ideal (X_1, ..., X_n).
MonomialIdeal maximal_ideal(std::size_t nvars);

/// (X_1^{b_1}, ..., X_n^{b_n}).
MonomialIdeal power_ideal(const Exponent& b);

bool divides(const Exponent& v, const Exponent& u);

/// X^u ∈ J.
bool contains_monomial(const MonomialIdeal& ideal, const Exponent& u);

/// J^{[q]} = (X^{q·w} | X^w ∈ J).
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::int64_t q);

/// J = ⋂ components, pairwise incomparable. Requires J proper.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// True when 𝔞 ⊆ Rad(J), i.e. every generator of 𝔞 meets the support of every component.
bool radical_contains(const MonomialIdeal& j, const MonomialIdeal& a);

/// ν^J_𝔞(q) by exhaustive search over β ∈ ℕ^r. Exponential; used as a test oracle.
std::int64_t nu_bruteforce(const MonomialIdeal& a, const MonomialIdeal& j, std::int64_t q);

}  // namespace bsroots
