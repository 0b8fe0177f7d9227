#include "bsroots/optim.hpp"

#include "bsroots/errors.hpp"

#include <stdexcept>

namespace bsroots {

namespace {

struct Column {
    std::size_t var;   // original variable, or npos for slack/artificial
    int sign;          // +1 or -1 contribution to the original variable
    bool artificial;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

class Tableau {
public:
    explicit Tableau(const LinearProgram& lp)
    {
        for (std::size_t k = 0; k < lp.num_vars; ++k) {
            cols_.push_back({k, +1, false});
            if (!lp.is_nonneg(k)) cols_.push_back({k, -1, false});
        }
        const std::size_t structural = cols_.size();

        struct Row {
            RatVector coeffs;
            Rational rhs;
            Relation rel;
        };
        std::vector<Row> rows;
        for (const auto& c : lp.constraints) {
            if (c.coeffs.size() != lp.num_vars) throw std::invalid_argument("constraint arity mismatch");
            Row row{RatVector(structural), c.rhs, c.rel};
            for (std::size_t col = 0; col < structural; ++col)
                row.coeffs[col] = cols_[col].sign * c.coeffs[cols_[col].var];
            if (row.rhs < 0) {
                for (auto& x : row.coeffs) x = -x;
                row.rhs = -row.rhs;
                if (row.rel == Relation::le)
                    row.rel = Relation::ge;
                else if (row.rel == Relation::ge)
                    row.rel = Relation::le;
            }
            rows.push_back(std::move(row));
        }

        // auxiliary columns
        std::vector<std::size_t> slack(rows.size(), npos), art(rows.size(), npos);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].rel != Relation::eq) {
                slack[i] = cols_.size();
                cols_.push_back({npos, rows[i].rel == Relation::le ? 1 : -1, false});
            }
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].rel != Relation::le) {
                art[i] = cols_.size();
                cols_.push_back({npos, 1, true});
            }
        }

        width_ = cols_.size() + 1;
        m_ = rows.size();
        t_.assign(m_ * width_, Rational(0));
        basis_.assign(m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t col = 0; col < structural; ++col) at(i, col) = rows[i].coeffs[col];
            if (slack[i] != npos) at(i, slack[i]) = cols_[slack[i]].sign;
            if (art[i] != npos) at(i, art[i]) = 1;
            at(i, width_ - 1) = rows[i].rhs;
            basis_[i] = art[i] != npos ? art[i] : slack[i];
        }
        obj_.assign(width_, Rational(0));
        num_vars_ = lp.num_vars;
    }

    OptResult solve(const RatVector& objective)
    {
        OptResult res;
        bool any_art = false;
        for (const auto& c : cols_) any_art = any_art || c.artificial;
        if (any_art) {
            RatVector cost(cols_.size(), Rational(0));
            for (std::size_t col = 0; col < cols_.size(); ++col)
                if (cols_[col].artificial) cost[col] = -1;
            set_objective(cost);
            if (!iterate(false)) throw std::logic_error("phase one cannot be unbounded");
            if (obj_[width_ - 1] < 0) {
                res.status = OptStatus::infeasible;
                return res;
            }
            drive_out_artificials();
        }
        RatVector cost(cols_.size(), Rational(0));
        for (std::size_t col = 0; col < cols_.size(); ++col)
            if (cols_[col].var != npos) cost[col] = cols_[col].sign * objective[cols_[col].var];
        set_objective(cost);
        if (!iterate(true)) {
            res.status = OptStatus::unbounded;
            res.witness = ray_;
            return res;
        }
        res.status = OptStatus::optimal;
        res.value = obj_[width_ - 1];
        res.witness.assign(num_vars_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& c = cols_[basis_[i]];
            if (c.var != npos) res.witness[c.var] += c.sign * at(i, width_ - 1);
        }
        return res;
    }

private:
    Rational& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }

    void set_objective(const RatVector& cost)
    {
        // row holds z_j - c_j; the last entry is the objective value
        for (std::size_t col = 0; col < cols_.size(); ++col) obj_[col] = -cost[col];
        obj_[width_ - 1] = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < width_; ++j) {
                if (at(i, j) != 0) obj_[j] += cb * at(i, j);
            }
        }
    }

    void pivot(std::size_t row, std::size_t col)
    {
        const Rational inv = 1 / at(row, col);
        for (std::size_t j = 0; j < width_; ++j)
            if (at(row, j) != 0) at(row, j) *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            const Rational f = at(i, col);
            for (std::size_t j = 0; j < width_; ++j)
                if (at(row, j) != 0) at(i, j) -= f * at(row, j);
        }
        if (obj_[col] != 0) {
            const Rational f = obj_[col];
            for (std::size_t j = 0; j < width_; ++j)
                if (at(row, j) != 0) obj_[j] -= f * at(row, j);
        }
        basis_[row] = col;
    }

    // false when unbounded (ray_ is filled)
    bool iterate(bool phase_two)
    {
        for (;;) {
            std::size_t enter = npos;
            for (std::size_t col = 0; col < cols_.size(); ++col) {
                if (phase_two && cols_[col].artificial) continue;
                if (obj_[col] < 0) {
                    enter = col;
                    break;
                }
            }
            if (enter == npos) return true;
            std::size_t leave = npos;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (at(i, enter) <= 0) continue;
                Rational ratio = at(i, width_ - 1) / at(i, enter);
                if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == npos) {
                ray_.assign(num_vars_, Rational(0));
                if (cols_[enter].var != npos) ray_[cols_[enter].var] += cols_[enter].sign;
                for (std::size_t i = 0; i < m_; ++i) {
                    const auto& c = cols_[basis_[i]];
                    if (c.var != npos) ray_[c.var] -= c.sign * at(i, enter);
                }
                return false;
            }
            pivot(leave, enter);
        }
    }

    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < m_;) {
            if (!cols_[basis_[i]].artificial) {
                ++i;
                continue;
            }
            std::size_t col = 0;
            while (col < cols_.size() && (cols_[col].artificial || at(i, col) == 0)) ++col;
            if (col < cols_.size()) {
                pivot(i, col);
                ++i;
                continue;
            }
            // redundant row
            t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i * width_),
                     t_.begin() + static_cast<std::ptrdiff_t>((i + 1) * width_));
            basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            --m_;
        }
    }

    std::vector<Column> cols_;
    std::vector<Rational> t_;
    std::vector<std::size_t> basis_;
    RatVector obj_;
    RatVector ray_;
    std::size_t width_ = 0;
    std::size_t m_ = 0;
    std::size_t num_vars_ = 0;
};

struct BranchState {
    const LinearProgram* base;
    bool integral_objective;
    std::size_t nodes = 0;
    std::size_t node_limit;
    bool have_incumbent = false;
    Rational incumbent;
    RatVector witness;
};

bool branch(BranchState& st, LinearProgram& lp)
{
    if (++st.nodes > st.node_limit)
        throw BudgetExceededError("branch and bound exceeded " + std::to_string(st.node_limit) + " nodes");
    const OptResult res = lp_max(lp);
    if (res.status == OptStatus::infeasible) return true;
    if (res.status == OptStatus::unbounded) return false;

    const Rational bound = st.integral_objective ? Rational(floor(res.value)) : res.value;
    if (st.have_incumbent && bound <= st.incumbent) return true;

    std::size_t var = npos;
    Rational best_dist;
    const Rational half(1, 2);
    for (std::size_t k = 0; k < lp.num_vars; ++k) {
        const Rational f = frac(res.witness[k]);
        if (f == 0) continue;
        Rational dist = f > half ? Rational(f - half) : Rational(half - f);
        if (var == npos || dist < best_dist) {
            var = k;
            best_dist = std::move(dist);
        }
    }
    if (var == npos) {
        st.have_incumbent = true;
        st.incumbent = res.value;
        st.witness = res.witness;
        return true;
    }

    Constraint cut;
    cut.coeffs.assign(lp.num_vars, Rational(0));
    cut.coeffs[var] = 1;

    cut.rel = Relation::ge;
    cut.rhs = ceil(res.witness[var]);
    lp.constraints.push_back(cut);
    bool ok = branch(st, lp);
    lp.constraints.pop_back();
    if (!ok) return false;

    cut.rel = Relation::le;
    cut.rhs = floor(res.witness[var]);
    lp.constraints.push_back(cut);
    ok = branch(st, lp);
    lp.constraints.pop_back();
    return ok;
}

}  // namespace

OptResult lp_max(const LinearProgram& lp)
{
    if (lp.objective.size() != lp.num_vars) throw std::invalid_argument("objective arity mismatch");
    Tableau t(lp);
    return t.solve(lp.objective);
}

OptResult ilp_max(const LinearProgram& lp, const IlpOptions& opts)
{
    BranchState st{&lp, true, 0, opts.node_limit, false, Rational(0), {}};
    for (const auto& c : lp.objective) st.integral_objective = st.integral_objective && is_integer(c);
    LinearProgram work = lp;
    OptResult res;
    if (!branch(st, work)) {
        res.status = OptStatus::unbounded;
        res.witness = lp_max(lp).witness;
        return res;
    }
    if (!st.have_incumbent) {
        res.status = OptStatus::infeasible;
        return res;
    }
    res.status = OptStatus::optimal;
    res.value = st.incumbent;
    res.witness = std::move(st.witness);
    return res;
}

std::optional<IntVector> recession_ray(const std::vector<Constraint>& cone, const RatVector& objective,
                                       const std::vector<bool>& nonneg)
{
    LinearProgram lp;
    lp.num_vars = objective.size();
    lp.objective = objective;
    lp.nonneg = nonneg.empty() ? std::vector<bool>(lp.num_vars, false) : nonneg;
    for (const auto& c : cone) lp.constraints.push_back({c.coeffs, c.rel, Rational(0)});
    lp.constraints.push_back({objective, Relation::le, Rational(1)});
    const OptResult res = lp_max(lp);
    if (res.status != OptStatus::optimal || res.value <= 0) return std::nullopt;
    return primitive(res.witness);
}

}  // namespace bsroots
