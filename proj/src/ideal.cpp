#include "bsroots/ideal.hpp"

#include "bsroots/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace bsroots {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Exponent> generators) : nvars_(nvars)
{
    if (nvars == 0) throw InputError("an ideal needs at least one variable");
    if (generators.empty()) throw InputError("empty generator list");
    for (const auto& g : generators) {
        if (g.size() != nvars)
            throw InputError("generator of length " + std::to_string(g.size()) + " in " +
                             std::to_string(nvars) + " variables");
        for (auto e : g)
            if (e < 0) throw InputError("negative exponent " + std::to_string(e));
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool keep = true;
        for (std::size_t k = 0; k < generators.size() && keep; ++k) {
            if (k == i) continue;
            if (generators[k] == generators[i]) {
                keep = k > i;  // first occurrence wins
            } else if (divides(generators[k], generators[i])) {
                keep = false;
            }
        }
        if (keep) gens_.push_back(generators[i]);
    }
}

bool MonomialIdeal::is_unit() const noexcept
{
    return std::any_of(gens_.begin(), gens_.end(), [](const Exponent& g) {
        return std::all_of(g.begin(), g.end(), [](std::int64_t e) { return e == 0; });
    });
}

IntMatrix MonomialIdeal::exponent_matrix() const
{
    IntMatrix m(nvars_, IntVector(gens_.size()));
    for (std::size_t j = 0; j < gens_.size(); ++j)
        for (std::size_t i = 0; i < nvars_; ++i) m[i][j] = gens_[j][i];
    return m;
}

std::int64_t MonomialIdeal::max_exponent() const noexcept
{
    std::int64_t m = 0;
    for (const auto& g : gens_)
        for (auto e : g) m = std::max(m, e);
    return m;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.nvars_ != b.nvars_ || a.gens_.size() != b.gens_.size()) return false;
    auto x = a.gens_;
    auto y = b.gens_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

MonomialIdeal maximal_ideal(std::size_t nvars)
{
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < nvars; ++i) {
        Exponent e(nvars, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal power_ideal(const Exponent& b)
{
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] <= 0) throw InputError("variable powers must be positive");
        Exponent e(b.size(), 0);
        e[i] = b[i];
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(b.size(), std::move(gens));
}

bool divides(const Exponent& v, const Exponent& u)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > u[i]) return false;
    return true;
}

bool contains_monomial(const MonomialIdeal& ideal, const Exponent& u)
{
    if (u.size() != ideal.nvars())
        throw InputError("exponent of length " + std::to_string(u.size()) + " against " +
                         std::to_string(ideal.nvars()) + " variables");
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Exponent& g) { return divides(g, u); });
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::int64_t q)
{
    if (q < 1) throw InputError("Frobenius power needs q >= 1");
    std::vector<Exponent> gens = ideal.generators();
    for (auto& g : gens)
        for (auto& e : g) e *= q;
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

namespace {

// C_a ⊇ C_b as ideals
bool component_contains(const IrreducibleComponent& a, const IrreducibleComponent& b)
{
    for (const auto& pb : b.powers) {
        auto it = std::find_if(a.powers.begin(), a.powers.end(),
                               [&](const VariablePower& pa) { return pa.var == pb.var; });
        if (it == a.powers.end() || it->exponent > pb.exponent) return false;
    }
    return true;
}

void decompose(std::vector<Exponent> gens, std::size_t n, std::vector<IrreducibleComponent>& out)
{
    // minimalise
    MonomialIdeal ideal(n, std::move(gens));
    const auto& g = ideal.generators();
    for (const auto& u : g) {
        std::size_t support = 0, first = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] > 0) {
                ++support;
                if (first == n) first = i;
            }
        }
        if (support < 2) continue;
        // J = (J + X_i^{u_i}) ∩ (J + X^{u - u_i e_i})
        std::vector<Exponent> left = g, right = g;
        Exponent pure(n, 0);
        pure[first] = u[first];
        left.push_back(pure);
        Exponent rest = u;
        rest[first] = 0;
        right.push_back(rest);
        decompose(std::move(left), n, out);
        decompose(std::move(right), n, out);
        return;
    }
    IrreducibleComponent c;
    for (const auto& u : g) {
        for (std::size_t i = 0; i < n; ++i)
            if (u[i] > 0) c.powers.push_back({i, u[i]});
    }
    std::sort(c.powers.begin(), c.powers.end(),
              [](const VariablePower& x, const VariablePower& y) { return x.var < y.var; });
    out.push_back(std::move(c));
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal)
{
    if (ideal.is_unit()) throw InputError("the unit ideal has no irreducible decomposition");
    std::vector<IrreducibleComponent> raw;
    decompose(ideal.generators(), ideal.nvars(), raw);

    std::vector<IrreducibleComponent> out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < raw.size() && !redundant; ++k) {
            if (k == i) continue;
            if (raw[k] == raw[i])
                redundant = k < i;
            else if (component_contains(raw[i], raw[k]))
                redundant = true;
        }
        if (!redundant) out.push_back(raw[i]);
    }
    return out;
}

bool radical_contains(const MonomialIdeal& j, const MonomialIdeal& a)
{
    for (const auto& comp : irreducible_decomposition(j)) {
        for (const auto& g : a.generators()) {
            const bool meets = std::any_of(comp.powers.begin(), comp.powers.end(),
                                           [&](const VariablePower& p) { return g[p.var] > 0; });
            if (!meets) return false;
        }
    }
    return true;
}

std::int64_t nu_bruteforce(const MonomialIdeal& a, const MonomialIdeal& j, std::int64_t q)
{
    if (q < 1) throw InputError("nu needs q >= 1");
    if (j.is_unit()) throw InputError("J must be a proper ideal");
    const std::size_t n = a.nvars();
    const std::size_t r = a.size();
    if (j.nvars() != n) throw InputError("ideals live in different polynomial rings");

    // k_j = least k with X^{k a_j} ∈ J; exists iff X^{a_j} ∈ Rad(J)
    const std::int64_t kmax = std::max<std::int64_t>(1, j.max_exponent());
    std::int64_t bound = 0;
    for (const auto& g : a.generators()) {
        std::int64_t k = 1;
        for (; k <= kmax; ++k) {
            Exponent m = g;
            for (auto& e : m) e *= k;
            if (contains_monomial(j, m)) break;
        }
        if (k > kmax) throw RadicalContainmentError("generator is not in the radical of J");
        bound += q * k - 1;
    }

    const MonomialIdeal jq = frobenius_power(j, q);
    Exponent u(n, 0);
    // exists β with Σβ = t and X^{Σ β_j a_j} ∉ J^{[q]}; membership is monotone in u
    std::function<bool(std::size_t, std::int64_t)> witness = [&](std::size_t idx, std::int64_t left) {
        if (contains_monomial(jq, u)) return false;
        if (left == 0) return true;
        if (idx + 1 == r) {
            const auto& g = a.generator(idx);
            for (std::size_t i = 0; i < n; ++i) u[i] += left * g[i];
            const bool ok = !contains_monomial(jq, u);
            for (std::size_t i = 0; i < n; ++i) u[i] -= left * g[i];
            return ok;
        }
        const auto& g = a.generator(idx);
        for (std::int64_t b = left; b >= 0; --b) {
            for (std::size_t i = 0; i < n; ++i) u[i] += b * g[i];
            const bool ok = witness(idx + 1, left - b);
            for (std::size_t i = 0; i < n; ++i) u[i] -= b * g[i];
            if (ok) return true;
        }
        return false;
    };

    std::int64_t t = 0;
    while (t + 1 <= bound && witness(0, t + 1)) ++t;
    return t;
}

}  // namespace bsroots
