#include "bsroots/oracles.hpp"

#include "bsroots/gamma.hpp"
#include "bsroots/linalg.hpp"

#include <algorithm>
#include <functional>

namespace bsroots::oracle {

namespace mp = boost::multiprecision;

Integer tau_enumerate(const MonomialIdeal& a, const IntVector& w)
{
    const std::size_t n = a.nvars(), r = a.size();
    IntVector left = w;
    Integer best = 0;
    std::function<void(std::size_t, const Integer&)> go = [&](std::size_t j, const Integer& sum) {
        if (j == r) {
            best = mp::max(best, sum);
            return;
        }
        for (Integer b = 0;; ++b) {
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) ok = ok && b * a.generator(j)[i] <= left[i];
            if (!ok) break;
            for (std::size_t i = 0; i < n; ++i) left[i] -= b * a.generator(j)[i];
            go(j + 1, sum + b);
            for (std::size_t i = 0; i < n; ++i) left[i] += b * a.generator(j)[i];
            if (std::all_of(a.generator(j).begin(), a.generator(j).end(), [](auto e) { return e == 0; })) break;
        }
    };
    go(0, 0);
    return best;
}

std::vector<RatVector> facets_bruteforce(const MonomialIdeal& a)
{
    const std::size_t n = a.nvars(), r = a.size();
    const std::size_t total = r + n;  // points, then directions
    std::set<RatVector> found;
    std::vector<bool> pick(total, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(std::min(n, total)), pick.end(), true);
    do {
        RatMatrix m;
        RatVector rhs;
        bool has_point = false;
        for (std::size_t k = 0; k < total; ++k) {
            if (!pick[k]) continue;
            RatVector row(n, Rational(0));
            if (k < r) {
                for (std::size_t i = 0; i < n; ++i) row[i] = a.generator(k)[i];
                rhs.emplace_back(1);
                has_point = true;
            } else {
                row[k - r] = 1;
                rhs.emplace_back(0);
            }
            m.push_back(std::move(row));
        }
        if (!has_point || rank(m) != n) continue;
        const auto sol = solve(m, rhs);
        if (!sol) continue;
        bool valid = true;
        for (const auto& c : *sol) valid = valid && c >= 0;
        for (std::size_t j = 0; j < r && valid; ++j) {
            Rational v = 0;
            for (std::size_t i = 0; i < n; ++i) v += (*sol)[i] * a.generator(j)[i];
            valid = v >= 1;
        }
        if (valid) found.insert(*sol);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return {found.begin(), found.end()};
}

std::vector<std::size_t> coordinate_facets_bruteforce(const MonomialIdeal& a)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        const bool meets = std::any_of(a.generators().begin(), a.generators().end(),
                                       [i](const Exponent& g) { return g[i] == 0; });
        if (meets) out.push_back(i);
    }
    return out;
}

namespace {

Integer laplace(const std::vector<std::vector<std::int64_t>>& m)
{
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Integer acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<std::int64_t>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        const Integer term = m[0][c] * laplace(sub);
        acc += c % 2 == 0 ? term : Integer(-term);
    }
    return acc;
}

}  // namespace

Integer integrality_modulus_laplace(const MonomialIdeal& a)
{
    const std::size_t n = a.nvars(), r = a.size();
    Integer acc = 1;
    for (unsigned long rows = 1; rows < (1UL << n); ++rows) {
        for (unsigned long cols = 1; cols < (1UL << r); ++cols) {
            if (__builtin_popcountl(rows) != __builtin_popcountl(cols)) continue;
            std::vector<std::vector<std::int64_t>> m;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(rows >> i & 1UL)) continue;
                std::vector<std::int64_t> row;
                for (std::size_t j = 0; j < r; ++j)
                    if (cols >> j & 1UL) row.push_back(a.generator(j)[i]);
                m.push_back(std::move(row));
            }
            const Integer d = mp::abs(laplace(m));
            if (d != 0) acc = acc / mp::gcd(acc, d) * d;
        }
    }
    return acc;
}

std::set<Rational> roots_gamma_literal(const MonomialIdeal& a, long alpha_max, long beta_min)
{
    const std::size_t n = a.nvars(), r = a.size();
    std::set<Rational> out;
    for (unsigned long am = 0; am < (1UL << r); ++am) {
        for (unsigned long bm = 0; bm < (1UL << n); ++bm) {
            std::vector<std::size_t> gens, vars;
            for (std::size_t j = 0; j < r; ++j)
                if (am >> j & 1UL) gens.push_back(j);
            for (std::size_t i = 0; i < n; ++i)
                if (bm >> i & 1UL) vars.push_back(i);
            IntVector alpha(gens.size(), Integer(0)), beta(vars.size(), Integer(-1));
            // odometer over α ∈ [0, alpha_max]^A, β ∈ [beta_min, −1]^B
            for (;;) {
                const auto v = gamma_value(a, gens, alpha, vars, beta);
                if (v && !out.count(*v) && condition_check(a, gens, alpha, vars, beta)) out.insert(*v);
                std::size_t k = 0;
                for (; k < alpha.size(); ++k) {
                    if (alpha[k] < alpha_max) {
                        ++alpha[k];
                        break;
                    }
                    alpha[k] = 0;
                }
                if (k < alpha.size()) continue;
                std::size_t t = 0;
                for (; t < beta.size(); ++t) {
                    if (beta[t] > beta_min) {
                        --beta[t];
                        break;
                    }
                    beta[t] = -1;
                }
                if (t == beta.size()) break;
            }
        }
    }
    return out;
}

bool decomposition_matches(const MonomialIdeal& j, const std::vector<IrreducibleComponent>& comps, long side)
{
    const std::size_t n = j.nvars();
    Exponent u(n, 0);
    for (;;) {
        bool in_all = true;
        for (const auto& c : comps) {
            bool hit = false;
            for (const auto& p : c.powers) hit = hit || u[p.var] >= p.exponent;
            in_all = in_all && hit;
        }
        if (in_all != contains_monomial(j, u)) return false;
        std::size_t i = 0;
        while (i < n && u[i] == side) u[i++] = 0;
        if (i == n) return true;
        ++u[i];
    }
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t max_vars, std::size_t max_gens, long max_exp)
{
    std::uniform_int_distribution<std::size_t> nd(1, max_vars), rd(1, max_gens);
    std::uniform_int_distribution<long> ed(0, max_exp);
    const std::size_t n = nd(rng), r = rd(rng);
    std::vector<Exponent> gens;
    while (gens.size() < r) {
        Exponent g(n);
        for (auto& e : g) e = ed(rng);
        if (std::any_of(g.begin(), g.end(), [](auto e) { return e > 0; })) gens.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(gens));
}

}  // namespace bsroots::oracle
