#include "bsroots/thresholds.hpp"

#include "bsroots/errors.hpp"
#include "bsroots/optim.hpp"
#include "bsroots/parallel.hpp"

#include <json.hpp>

namespace bsroots {

namespace {

LinearProgram budget_program(const MonomialIdeal& a, const std::vector<std::size_t>& support,
                             const RatVector& bounds)
{
    const std::size_t r = a.size();
    for (std::size_t j = 0; j < r; ++j) {
        bool seen = false;
        for (auto i : support) seen = seen || a.generator(j)[i] > 0;
        if (!seen) throw UnboundedInvariantError("a generator has no variable in the constrained set");
    }
    LinearProgram lp;
    lp.num_vars = r;
    lp.objective.assign(r, Rational(1));
    for (std::size_t k = 0; k < support.size(); ++k) {
        Constraint c;
        c.coeffs.resize(r);
        for (std::size_t j = 0; j < r; ++j) c.coeffs[j] = a.generator(j)[support[k]];
        c.rel = Relation::le;
        c.rhs = bounds[k];
        lp.constraints.push_back(std::move(c));
    }
    return lp;
}

std::vector<std::size_t> all_vars(std::size_t n)
{
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

void check_nonneg(const IntVector& w)
{
    for (const auto& x : w)
        if (x < 0) throw InputError("bounds must be nonnegative");
}

void check_radical(const MonomialIdeal& a, const MonomialIdeal& j)
{
    if (a.nvars() != j.nvars()) throw InputError("ideals live in different polynomial rings");
    if (j.is_unit()) throw InputError("J must be a proper ideal");
    if (!radical_contains(j, a)) throw RadicalContainmentError("the ideal is not contained in the radical of J");
}

}  // namespace

Integer tau_partial(const MonomialIdeal& a, const std::vector<std::size_t>& support, const IntVector& bounds)
{
    if (support.size() != bounds.size()) throw InputError("support and bounds differ in length");
    check_nonneg(bounds);
    const OptResult res = ilp_max(budget_program(a, support, to_rational(bounds)));
    if (res.status != OptStatus::optimal) throw UnboundedInvariantError("integer program did not reach an optimum");
    return numerator(res.value);
}

Integer tau(const MonomialIdeal& a, const IntVector& w)
{
    if (w.size() != a.nvars()) throw InputError("bound vector has the wrong length");
    return tau_partial(a, all_vars(a.nvars()), w);
}

Rational tau_q_partial(const MonomialIdeal& a, const std::vector<std::size_t>& support, const RatVector& bounds)
{
    if (support.size() != bounds.size()) throw InputError("support and bounds differ in length");
    const OptResult res = lp_max(budget_program(a, support, bounds));
    if (res.status != OptStatus::optimal) throw UnboundedInvariantError("linear program did not reach an optimum");
    return res.value;
}

Rational tau_q(const NewtonPolyhedron& p, const RatVector& w)
{
    for (const auto& x : w)
        if (x < 0) throw InputError("point outside the positive orthant");
    return p.tau_q(w);
}

Rational tau_q(const MonomialIdeal& a, const RatVector& w) { return tau_q(NewtonPolyhedron(a), w); }

Rational tau_q_lp(const MonomialIdeal& a, const RatVector& w)
{
    if (w.size() != a.nvars()) throw InputError("point has the wrong dimension");
    return tau_q_partial(a, all_vars(a.nvars()), w);
}

Integer nu(const MonomialIdeal& a, const MonomialIdeal& j, const Integer& q)
{
    if (q < 1) throw InputError("nu needs q >= 1");
    check_radical(a, j);
    Integer best = 0;
    for (const auto& comp : irreducible_decomposition(j)) {
        std::vector<std::size_t> support;
        IntVector bounds;
        for (const auto& vp : comp.powers) {
            support.push_back(vp.var);
            bounds.push_back(q * vp.exponent - 1);
        }
        const Integer t = tau_partial(a, support, bounds);
        if (t > best) best = t;
    }
    return best;
}

Rational f_threshold(const MonomialIdeal& a, const MonomialIdeal& j)
{
    check_radical(a, j);
    Rational best = 0;
    for (const auto& comp : irreducible_decomposition(j)) {
        std::vector<std::size_t> support;
        RatVector bounds;
        for (const auto& vp : comp.powers) {
            support.push_back(vp.var);
            bounds.emplace_back(vp.exponent);
        }
        const Rational t = tau_q_partial(a, support, bounds);
        if (t > best) best = t;
    }
    return best;
}

Rational lct(const MonomialIdeal& a) { return tau_q(a, RatVector(a.nvars(), Rational(1))); }

Rational jumping_number(const MonomialIdeal& a, const IntVector& b)
{
    if (b.size() != a.nvars()) throw InputError("b has the wrong length");
    for (const auto& x : b)
        if (x < 1) throw InputError("b must be positive");
    return tau_q(a, to_rational(b));
}

bool multiplier_ideal_membership(const MonomialIdeal& a, const Rational& alpha, const IntVector& u)
{
    if (alpha <= 0) throw InputError("alpha must be positive");
    if (u.size() != a.nvars()) throw InputError("exponent has the wrong length");
    check_nonneg(u);
    const NewtonPolyhedron p(a);
    RatVector v = to_rational(u);
    for (auto& x : v) x += 1;
    for (const auto& f : p.facets()) {
        if (f.in_coordinate_hyperplane) continue;
        if (dot(f.functional, v) <= alpha) return false;
    }
    return true;
}

QuasiLinearLaw quasi_linear_law(const MonomialIdeal& a, const MonomialIdeal& j, const LawOptions& opts)
{
    if (opts.runs < 1) throw InputError("stabilisation needs at least one run");
    check_radical(a, j);
    QuasiLinearLaw law;
    law.modulus = integrality_modulus(a);
    law.slope = f_threshold(a, j);
    const long n = law.modulus.convert_to<long>();

    struct Outcome {
        Rational intercept;
        Integer first_stable;
        std::vector<LawSample> trace;
    };
    std::vector<Outcome> out(static_cast<std::size_t>(n));

    for_each_index(static_cast<std::size_t>(n), opts.parallel, [&](std::size_t residue) {
        Outcome& o = out[residue];
        Integer q = residue == 0 ? Integer(n) : Integer(residue);
        Rational last;
        std::size_t streak = 0;
        for (std::size_t s = 0; s < opts.budget; ++s, q += n) {
            const Integer v = nu(a, j, q);
            o.trace.push_back({q, v});
            Rational gamma = Rational(v) - law.slope * q;
            if (streak > 0 && gamma == last) {
                ++streak;
            } else {
                streak = 1;
                last = gamma;
                o.first_stable = q;
            }
            if (streak == opts.runs) {
                o.intercept = last;
                return;
            }
        }
        nlohmann::json detail = nlohmann::json::array();
        for (const auto& t : o.trace) detail.push_back({t.q.str(), t.nu.str()});
        throw BudgetExceededError("intercept did not settle for residue " + std::to_string(residue), detail.dump());
    });

    law.q_min = 1;
    for (long r = 0; r < n; ++r) {
        auto& o = out[static_cast<std::size_t>(r)];
        law.intercepts[r] = o.intercept;
        if (o.first_stable > law.q_min) law.q_min = o.first_stable;
        law.trace[r] = std::move(o.trace);
    }
    return law;
}

bool detect_period(const std::vector<Integer>& seq, std::size_t& preperiod, std::size_t& period)
{
    const std::size_t len = seq.size();
    for (std::size_t p = 1; 2 * p <= len; ++p) {
        const std::size_t need = std::max<std::size_t>(2 * p, 3);
        if (need > len) break;
        for (std::size_t s = 0; s + need <= len; ++s) {
            bool ok = true;
            for (std::size_t k = s; k + p < len && ok; ++k) ok = seq[k] == seq[k + p];
            if (ok) {
                preperiod = s;
                period = p;
                return true;
            }
        }
    }
    return false;
}

Periodicity nu_periodicity(const MonomialIdeal& a, const MonomialIdeal& j, const Integer& p, std::size_t depth)
{
    if (p < 2) throw InputError("p must be at least 2");
    if (depth < 1) throw InputError("depth must be positive");
    Periodicity out;
    Integer q = p;
    for (std::size_t e = 1; e <= depth + 1; ++e, q *= p) out.nu_values.push_back(nu(a, j, q));
    for (std::size_t e = 0; e < depth; ++e) out.differences.push_back(out.nu_values[e + 1] - p * out.nu_values[e]);
    if (!detect_period(out.differences, out.preperiod, out.period)) {
        nlohmann::json detail = nlohmann::json::array();
        for (const auto& d : out.differences) detail.push_back(d.str());
        throw BudgetExceededError("no period detected within " + std::to_string(depth) + " terms", detail.dump());
    }
    return out;
}

}  // namespace bsroots
