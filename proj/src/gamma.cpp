#include "bsroots/gamma.hpp"

#include "bsroots/errors.hpp"
#include "bsroots/geometry.hpp"
#include "bsroots/linalg.hpp"
#include "bsroots/parallel.hpp"

#include <set>

namespace bsroots {

namespace mp = boost::multiprecision;

OptResult pointed_ilp_max(const RatMatrix& rows, const RatVector& rhs, const RatVector& obj)
{
    const std::size_t k = obj.size();
    LinearProgram lp;
    lp.num_vars = k;
    lp.objective = obj;
    lp.nonneg.assign(k, false);
    for (std::size_t i = 0; i < rows.size(); ++i) lp.constraints.push_back({rows[i], Relation::ge, rhs[i]});
    if (k == 0) {
        OptResult res;
        bool ok = true;
        for (const auto& h : rhs) ok = ok && h <= 0;
        res.status = ok ? OptStatus::optimal : OptStatus::infeasible;
        res.value = 0;
        return res;
    }
    const OptResult relax = lp_max(lp);
    if (relax.status == OptStatus::infeasible) return relax;
    if (relax.status == OptStatus::unbounded) throw InconclusiveError("integer program over an unbounded region");

    // vertices and rays of the region from its homogenisation
    IntMatrix cone;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RatVector row = rows[i];
        row.push_back(-rhs[i]);
        cone.push_back(primitive(row));
    }
    IntVector last(k + 1, Integer(0));
    last[k] = 1;
    cone.push_back(std::move(last));

    std::vector<Rational> lo(k), hi(k);
    std::vector<bool> seen(k, false);
    std::vector<Integer> neg(k, Integer(0)), pos(k, Integer(0));
    for (const auto& ray : extreme_rays(cone, k + 1)) {
        if (ray[k] == 0) {
            for (std::size_t i = 0; i < k; ++i) {
                if (ray[i] < 0) neg[i] += ray[i];
                if (ray[i] > 0) pos[i] += ray[i];
            }
            continue;
        }
        for (std::size_t i = 0; i < k; ++i) {
            const Rational x(ray[i], ray[k]);
            if (!seen[i] || x < lo[i]) lo[i] = x;
            if (!seen[i] || x > hi[i]) hi[i] = x;
            seen[i] = true;
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        RatVector e(k, Rational(0));
        e[i] = 1;
        lp.constraints.push_back({e, Relation::ge, Rational(floor(lo[i]) + neg[i])});
        lp.constraints.push_back({e, Relation::le, Rational(ceil(hi[i]) + pos[i])});
    }
    return ilp_max(lp);
}

namespace {

void validate(const MonomialIdeal& a, const std::vector<std::size_t>& gens, const IntVector& alpha,
              const std::vector<std::size_t>& vars, const IntVector& beta)
{
    if (gens.size() != alpha.size() || vars.size() != beta.size()) throw InputError("index and value lists differ");
    for (auto j : gens)
        if (j >= a.size()) throw InputError("generator index out of range");
    for (auto i : vars)
        if (i >= a.nvars()) throw InputError("variable index out of range");
    for (const auto& x : alpha)
        if (x < 0) throw InputError("alpha entries must be nonnegative");
    for (const auto& x : beta)
        if (x > -1) throw InputError("beta entries must be at most -1");
}

// rows e_j (j ∈ A) followed by ℓ_i (i ∈ B)
IntMatrix constraint_rows(const MonomialIdeal& a, const std::vector<std::size_t>& gens,
                          const std::vector<std::size_t>& vars)
{
    const std::size_t r = a.size();
    IntMatrix m;
    for (auto j : gens) {
        IntVector row(r, Integer(0));
        row[j] = 1;
        m.push_back(std::move(row));
    }
    for (auto i : vars) {
        IntVector row(r);
        for (std::size_t j = 0; j < r; ++j) row[j] = a.generator(j)[i];
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<Constraint> recession_rows(const IntMatrix& m, std::size_t na)
{
    std::vector<Constraint> cone;
    for (std::size_t t = 0; t < m.size(); ++t)
        cone.push_back({to_rational(m[t]), t < na ? Relation::ge : Relation::le, Rational(0)});
    return cone;
}

}  // namespace

bool condition_check(const MonomialIdeal& a, const std::vector<std::size_t>& gens, const IntVector& alpha,
                     const std::vector<std::size_t>& vars, const IntVector& beta)
{
    validate(a, gens, alpha, vars, beta);
    const std::size_t r = a.size();
    const std::size_t na = gens.size();
    const IntMatrix m = constraint_rows(a, gens, vars);
    const RatVector ones(r, Rational(1));

    if (recession_ray(recession_rows(m, na), ones)) return false;

    // bounds: c_j ≥ −α_j, ℓ_i(c) ≤ −β_i − 1
    LinearProgram lp;
    lp.num_vars = r;
    lp.objective = ones;
    lp.nonneg.assign(r, false);
    for (std::size_t t = 0; t < m.size(); ++t) {
        if (t < na)
            lp.constraints.push_back({to_rational(m[t]), Relation::ge, Rational(-alpha[t])});
        else
            lp.constraints.push_back({to_rational(m[t]), Relation::le, Rational(-beta[t - na] - 1)});
    }
    const OptResult relax = lp_max(lp);
    if (relax.status != OptStatus::optimal) throw InconclusiveError("relaxation has no optimum");
    if (relax.value < 1) return true;

    // c = U·y; the constraints see only the first `rank` coordinates of y
    const ColumnReduction red = column_reduce(m, r);
    const std::size_t k = red.rank;
    RatVector obj(k, Rational(0));
    for (std::size_t col = 0; col < r; ++col) {
        Integer s = 0;
        for (std::size_t row = 0; row < r; ++row) s += red.unimodular[row][col];
        if (col < k)
            obj[col] = s;
        else if (s != 0)
            throw InconclusiveError("objective is not constant along the lineality space");
    }
    RatMatrix rows;
    RatVector rhs;
    for (std::size_t t = 0; t < m.size(); ++t) {
        RatVector h(k, Rational(0));
        for (std::size_t col = 0; col < k; ++col)
            for (std::size_t j = 0; j < r; ++j) h[col] += m[t][j] * red.unimodular[j][col];
        if (t < na) {
            rows.push_back(std::move(h));
            rhs.emplace_back(-alpha[t]);
        } else {
            for (auto& x : h) x = -x;
            rows.push_back(std::move(h));
            rhs.emplace_back(beta[t - na] + 1);
        }
    }
    const OptResult best = pointed_ilp_max(rows, rhs, obj);
    if (best.status != OptStatus::optimal) throw InconclusiveError("integer program did not reach an optimum");
    return best.value < 1;
}

std::optional<Rational> gamma_value(const MonomialIdeal& a, const std::vector<std::size_t>& gens,
                                    const IntVector& alpha, const std::vector<std::size_t>& vars,
                                    const IntVector& beta)
{
    if (gens.size() != alpha.size() || vars.size() != beta.size()) throw InputError("index and value lists differ");
    const RatMatrix m = to_rational(constraint_rows(a, gens, vars));
    RatVector rhs = to_rational(alpha);
    for (const auto& b : beta) rhs.emplace_back(b);
    const auto u = solve(m, rhs);
    if (!u) return std::nullopt;
    if (!row_space_coefficients(m, RatVector(a.size(), Rational(1)))) return std::nullopt;
    Rational s = 0;
    for (const auto& x : *u) s += x;
    return s;
}

namespace {

// cosets ū ∈ ℚ^r/ℤ^r with m·ū integral, as representatives in [0,1)^r
std::vector<RatVector> coset_group(const IntMatrix& m, std::size_t r)
{
    const RatMatrix rm = to_rational(m);
    const auto basis = independent_rows(rm);
    RatMatrix s;
    for (auto i : basis) s.push_back(rm[i]);
    const auto inv = inverse(s);
    std::vector<RatVector> gens;
    for (std::size_t col = 0; col < r; ++col) {
        RatVector g(r);
        bool zero = true;
        for (std::size_t i = 0; i < r; ++i) {
            g[i] = frac((*inv)[i][col]);
            zero = zero && g[i] == 0;
        }
        if (!zero) gens.push_back(std::move(g));
    }
    std::set<RatVector> group{RatVector(r, Rational(0))};
    std::vector<RatVector> frontier{RatVector(r, Rational(0))};
    while (!frontier.empty()) {
        std::vector<RatVector> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                RatVector y(r);
                for (std::size_t i = 0; i < r; ++i) y[i] = frac(x[i] + g[i]);
                if (group.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    std::vector<RatVector> out;
    for (const auto& u : group) {
        bool integral = true;
        for (const auto& row : rm) integral = integral && is_integer(dot(row, u));
        if (integral) out.push_back(u);
    }
    return out;
}

struct Candidate {
    Rational value;
    std::vector<std::size_t> gens, vars;
    RatVector coset;
};

std::vector<std::size_t> bits(unsigned long mask, std::size_t len)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < len; ++k)
        if (mask >> k & 1UL) out.push_back(k);
    return out;
}

// rows and right-hand sides of {z : z_A ≥ 0, ℓ_B(ū + z) ≤ −1} in the form rows·z ≥ rhs
void coset_region(const IntMatrix& m, std::size_t na, const RatVector& coset, RatMatrix& rows, RatVector& rhs)
{
    for (std::size_t t = 0; t < m.size(); ++t) {
        RatVector row = to_rational(m[t]);
        if (t < na) {
            rows.push_back(std::move(row));
            rhs.emplace_back(0);
        } else {
            const Rational shift = dot(row, coset);
            for (auto& x : row) x = -x;
            rows.push_back(std::move(row));
            rhs.push_back(1 + shift);
        }
    }
}

}  // namespace

GammaReport roots_gamma(const MonomialIdeal& a, const GammaOptions& opts)
{
    const std::size_t r = a.size();
    const std::size_t n = a.nvars();
    if (r > 20 || n > 20) throw InputError("too many generators or variables for the component enumeration");
    GammaReport report;
    const Integer maxexp = a.max_exponent();
    report.alpha_max = opts.alpha_max.value_or(Integer(n) * maxexp);
    report.beta_min = opts.beta_min.value_or(-Integer(n) * maxexp - Integer(n));
    if (report.alpha_max < 0 || report.beta_min > -1) throw InputError("enumeration bounds are empty");

    std::vector<std::pair<unsigned long, unsigned long>> pairs;
    for (unsigned long bmask = 0; bmask < (1UL << n); ++bmask) {
        bool covers = true;
        for (std::size_t j = 0; j < r && covers; ++j) {
            bool hit = false;
            for (std::size_t i = 0; i < n; ++i) hit = hit || ((bmask >> i & 1UL) && a.generator(j)[i] > 0);
            covers = hit;
        }
        if (!covers) continue;
        for (unsigned long amask = 0; amask < (1UL << r); ++amask) pairs.emplace_back(amask, bmask);
    }

    std::vector<std::vector<Candidate>> found(pairs.size());
    for_each_index(pairs.size(), opts.parallel, [&](std::size_t t) {
        const auto gens = bits(pairs[t].first, r);
        const auto vars = bits(pairs[t].second, n);
        const IntMatrix m = constraint_rows(a, gens, vars);
        if (rank(m) != r) return;
        if (recession_ray(recession_rows(m, gens.size()), RatVector(r, Rational(1)))) return;
        for (auto& coset : coset_group(m, r)) {
            RatMatrix rows;
            RatVector rhs;
            coset_region(m, gens.size(), coset, rows, rhs);
            const OptResult best = pointed_ilp_max(rows, rhs, RatVector(r, Rational(1)));
            if (best.status != OptStatus::optimal) continue;
            Rational shift = 0;
            for (const auto& x : coset) shift += x;
            found[t].push_back({best.value + shift, gens, vars, std::move(coset)});
        }
    });

    std::map<Rational, std::vector<const Candidate*>> by_value;
    for (const auto& list : found)
        for (const auto& c : list) by_value[c.value].push_back(&c);

    // keep a value when some maximiser has α and β inside the enumeration box
    std::vector<std::pair<Rational, std::vector<const Candidate*>>> values(by_value.begin(), by_value.end());
    std::vector<std::optional<GammaComponent>> witness(values.size());
    for_each_index(values.size(), opts.parallel, [&](std::size_t v) {
        for (const Candidate* c : values[v].second) {
            const IntMatrix m = constraint_rows(a, c->gens, c->vars);
            const std::size_t na = c->gens.size();
            RatMatrix rows;
            RatVector rhs;
            coset_region(m, na, c->coset, rows, rhs);
            for (std::size_t t = 0; t < m.size(); ++t) {
                RatVector row = to_rational(m[t]);
                const Rational shift = dot(row, c->coset);
                if (t < na) {
                    for (auto& x : row) x = -x;
                    rows.push_back(std::move(row));
                    rhs.emplace_back(-report.alpha_max);
                } else {
                    rows.push_back(std::move(row));
                    rhs.push_back(Rational(report.beta_min) - shift);
                }
            }
            Rational target = c->value;
            for (const auto& x : c->coset) target -= x;
            rows.emplace_back(r, Rational(1));
            rhs.push_back(target);
            rows.emplace_back(r, Rational(-1));
            rhs.push_back(-target);
            const OptResult hit = pointed_ilp_max(rows, rhs, RatVector(r, Rational(0)));
            if (hit.status != OptStatus::optimal) continue;
            RatVector u(r);
            for (std::size_t j = 0; j < r; ++j) u[j] = c->coset[j] + hit.witness[j];
            GammaComponent g;
            g.gens = c->gens;
            g.vars = c->vars;
            for (auto j : c->gens) g.alpha.push_back(numerator(u[j]));
            for (std::size_t t = na; t < m.size(); ++t) g.beta.push_back(numerator(dot(to_rational(m[t]), u)));
            g.value = c->value;
            witness[v] = std::move(g);
            return;
        }
    });

    for (std::size_t v = 0; v < values.size(); ++v) {
        if (!witness[v]) continue;
        report.roots.push_back(values[v].first);
        report.witnesses.emplace(values[v].first, std::move(*witness[v]));
    }
    std::reverse(report.roots.begin(), report.roots.end());
    return report;
}

}  // namespace bsroots
