#pragma once

#include "bsroots/rational.hpp"

#include <optional>
#include <vector>

namespace bsroots {

enum class Relation { le, ge, eq };

struct Constraint {
    RatVector coeffs;
    Relation rel = Relation::le;
    Rational rhs;
};

/// maximize objective·x subject to the constraints; variables flagged in
/// `nonneg` are ≥ 0, the others free. An empty `nonneg` means all ≥ 0.
struct LinearProgram {
    std::size_t num_vars = 0;
    RatVector objective;
    std::vector<Constraint> constraints;
    std::vector<bool> nonneg;

    bool is_nonneg(std::size_t k) const { return nonneg.empty() || nonneg[k]; }
};

enum class OptStatus { optimal, unbounded, infeasible };

struct OptResult {
    OptStatus status = OptStatus::infeasible;
    Rational value;       // valid when optimal
    RatVector witness;    // optimal point, or an improving ray when unbounded
};

/// Exact two-phase primal simplex with Bland's rule.
OptResult lp_max(const LinearProgram& lp);

struct IlpOptions {
    std::size_t node_limit = 5'000'000;
};

/// Pure integer program by depth-first branch and bound over lp_max.
/// Branches on the most fractional variable (lowest index on ties), ceiling
/// side first. Throws BudgetExceededError past the node limit.
OptResult ilp_max(const LinearProgram& lp, const IlpOptions& opts = {});

/// An integer vector d in the cone {d : constraint rows (rel) 0} with
/// objective·d > 0, or nullopt. Right-hand sides of `cone` are ignored.
std::optional<IntVector> recession_ray(const std::vector<Constraint>& cone, const RatVector& objective,
                                       const std::vector<bool>& nonneg = {});

}  // namespace bsroots
