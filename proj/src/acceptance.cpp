#include "bsroots/acceptance.hpp"

#include "bsroots/gamma.hpp"
#include "bsroots/geometry.hpp"
#include "bsroots/oracles.hpp"
#include "bsroots/thresholds.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace bsroots {

namespace {

MonomialIdeal pairwise_products(std::size_t n)
{
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) {
            Exponent e(n, 0);
            e[i] = e[k] = 1;
            gens.push_back(std::move(e));
        }
    return MonomialIdeal(n, std::move(gens));
}

Rational q(long p, long d = 1) { return Rational(p, d); }

std::string join(const std::vector<Rational>& xs)
{
    std::string s = "{";
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + to_string(xs[k]);
    return s + "}";
}

}  // namespace

std::vector<ShippedIdeal> shipped_ideals()
{
    std::vector<ShippedIdeal> out;
    out.push_back({"ex2", MonomialIdeal(3, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}),
                   {q(-3, 4), q(-1), q(-5, 4), q(-3, 2)},
                   {{q(-3, 4), 1}, {q(-5, 4), 1}, {q(-3, 2), 1}, {q(-1), 3}}});
    out.push_back({"ex3", MonomialIdeal(4, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}),
                   {q(-4, 3), q(-3, 2), q(-5, 3), q(-2)},
                   {{q(-3, 2), 1}, {q(-4, 3), 1}, {q(-5, 3), 1}, {q(-2), 3}}});
    for (long n = 3; n <= 5; ++n) {
        const Rational a(-n, 2), b(-(n + 1), 2), c(-(n - 1));
        std::vector<Rational> roots{a, b, c};
        std::sort(roots.rbegin(), roots.rend());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        out.push_back({"ex1_n" + std::to_string(n), pairwise_products(static_cast<std::size_t>(n)), roots,
                       {{a, 1}, {b, 1}, {c, 1}}});
    }
    return out;
}

std::string format_result(const CriterionResult& r)
{
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << r.seconds << " s)";
    if (!r.detail.empty()) os << " -- " << r.detail;
    return os.str();
}

namespace {

struct Context {
    const AcceptanceOptions& opts;
    std::vector<ShippedIdeal> ideals = shipped_ideals();
    std::map<std::string, RootReport> charp;
    std::map<std::string, GammaReport> gamma;

    const ShippedIdeal& get(const std::string& name) const
    {
        return *std::find_if(ideals.begin(), ideals.end(), [&](const ShippedIdeal& s) { return s.name == name; });
    }
    const RootReport& roots(const std::string& name)
    {
        auto it = charp.find(name);
        if (it == charp.end()) {
            RootOptions ro;
            ro.parallel = opts.parallel;
            it = charp.emplace(name, roots_charp(get(name).ideal, ro)).first;
        }
        return it->second;
    }
    const GammaReport& gammas(const std::string& name)
    {
        auto it = gamma.find(name);
        if (it == gamma.end()) {
            GammaOptions go;
            go.parallel = opts.parallel;
            it = gamma.emplace(name, roots_gamma(get(name).ideal, go)).first;
        }
        return it->second;
    }
};

// both methods reproduce the known root set within the time limit
bool both_methods(Context& ctx, const std::string& name, double limit, std::string& detail)
{
    const auto start = std::chrono::steady_clock::now();
    const auto& expected = ctx.get(name).roots;
    const auto& a = ctx.roots(name).roots;
    const auto& b = ctx.gammas(name).roots;
    const double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = a == expected && b == expected && spent < limit;
    if (!detail.empty()) detail += "; ";
    detail += name + " charp " + join(a) + " gamma " + join(b);
    if (a != expected || b != expected) detail += " expected " + join(expected);
    if (spent >= limit) detail += " over time limit";
    return ok;
}

bool criterion_mod_z(Context& ctx, std::string& detail)
{
    bool ok = true;
    for (const auto& s : ctx.ideals) {
        const NewtonPolyhedron p(s.ideal);
        std::vector<Facet> facets = p.facets();
        if (ctx.opts.corrupt_facet_modulus) {
            auto it = std::find_if(facets.begin(), facets.end(), [](const Facet& f) {
                return !f.in_coordinate_hyperplane && f.modulus > 1;
            });
            if (it != facets.end()) it->modulus += 1;
        }
        const auto from_facets = roots_mod_Z(facets);
        std::set<Rational> from_roots;
        for (const auto& r : ctx.roots(s.name).roots) from_roots.insert(frac(r));
        const bool same = std::vector<Rational>(from_roots.begin(), from_roots.end()) == from_facets;
        if (!same) detail += s.name + " roots give " + join({from_roots.begin(), from_roots.end()}) +
                             " facets give " + join(from_facets) + "; ";
        ok = ok && same;
    }
    return ok;
}

bool criterion_lct(Context& ctx, std::string& detail)
{
    bool ok = true;
    for (const auto& s : ctx.ideals) {
        const auto& roots = ctx.roots(s.name).roots;
        const Rational c = lct(s.ideal);
        const Rational lp = tau_q_lp(s.ideal, RatVector(s.ideal.nvars(), Rational(1)));
        const bool same = !roots.empty() && roots.front() == -c && c == lp;
        if (!same) detail += s.name + " max root " + (roots.empty() ? "none" : to_string(roots.front())) +
                             " lct " + to_string(c) + "; ";
        ok = ok && same;
    }
    return ok;
}

std::vector<long> small_primes(long lo, long hi)
{
    std::vector<long> out;
    for (long p = lo; p <= hi; ++p) {
        bool prime = p > 1;
        for (long d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
        if (prime) out.push_back(p);
    }
    return out;
}

bool criterion_prop1(Context& ctx, std::string& detail)
{
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& s : ctx.ideals) {
        const std::size_t n = s.ideal.nvars();
        std::vector<MonomialIdeal> js{maximal_ideal(n), power_ideal(Exponent(n, 2))};
        for (long p : small_primes(5, 97)) {
            bool divides = false;
            for (const auto& [root, mult] : s.bpoly) divides = divides || denominator(root) % p == 0;
            if (divides) continue;
            for (const auto& j : js) {
                for (unsigned e = 1; e <= 2; ++e) {
                    ++checked;
                    if (!verify_prop1(s.ideal, j, p, e, s.bpoly)) {
                        ok = false;
                        detail += s.name + " p=" + std::to_string(p) + " e=" + std::to_string(e) + " fails; ";
                    }
                }
            }
        }
    }
    if (ok) detail = std::to_string(checked) + " congruences";
    return ok;
}

bool criterion_law(Context& ctx, std::string& detail)
{
    const auto& ex2 = ctx.get("ex2").ideal;
    LawOptions lo;
    lo.runs = 3;
    lo.parallel = ctx.opts.parallel;
    const auto law = quasi_linear_law(ex2, maximal_ideal(3), lo);
    bool ok = law.slope == q(3, 4);
    for (const auto& [j, gamma] : law.intercepts) {
        const long k = (3 * (j - 1)) % 4;
        const long m = k < 0 ? k + 4 : k;
        if (m == 0) ok = ok && gamma == q(-3, 4) && law.trace.at(j).size() == 3;
        if (m == 2) ok = ok && gamma == q(-5, 4) && law.trace.at(j).size() == 3;
    }
    detail = "N=" + to_string(law.modulus) + " alpha=" + to_string(law.slope) + " gamma_1=" +
             to_string(law.intercepts.at(1)) + " gamma_3=" + to_string(law.intercepts.at(3));
    return ok;
}

bool criterion_oracles(Context& ctx, std::string& detail)
{
    std::mt19937 rng(ctx.opts.seed);
    std::size_t failures = 0, checks = 0;
    std::string first;
    auto expect = [&](bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ++failures;
            if (first.empty()) first = what;
        }
    };
    for (std::size_t t = 0; t < ctx.opts.random_ideals; ++t) {
        const MonomialIdeal a = oracle::random_ideal(rng, 3, 4, 4);
        const std::size_t n = a.nvars();
        const NewtonPolyhedron p(a);
        const Integer modulus = integrality_modulus(a);
        const std::string tag = "ideal " + std::to_string(t);
        auto draw = [&](long hi) {
            std::uniform_int_distribution<long> d(0, hi);
            IntVector w(n);
            for (auto& x : w) x = d(rng);
            return w;
        };

        const IntVector w = draw(6);
        const Integer tw = tau(a, w);
        expect(tw == oracle::tau_enumerate(a, w), tag + ": tau against enumeration");
        const Rational gap = p.tau_q(to_rational(w)) - Rational(tw);
        expect(gap >= 0 && is_integer(gap * modulus), tag + ": tau_Q - tau in (1/N)Z>=0");

        const IntVector b = draw(5), b2 = draw(5);
        IntVector sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = b[i] + b2[i];
        expect(tau(a, sum) >= tau(a, b) + tau(a, b2), tag + ": superadditivity");

        const IntVector v = draw(3);
        IntVector scaled(n);
        for (std::size_t i = 0; i < n; ++i) scaled[i] = modulus * v[i];
        expect(Rational(tau(a, scaled)) == Rational(modulus) * p.tau_q(to_rational(v)), tag + ": tau(Nw) = N tau_Q(w)");

        std::uniform_int_distribution<long> jd(1, 2);
        Exponent powers(n);
        for (auto& x : powers) x = jd(rng);
        const MonomialIdeal j = t % 2 == 0 ? maximal_ideal(n) : power_ideal(powers);
        for (long qq = 1; qq <= 8; ++qq)
            expect(nu(a, j, qq) == nu_bruteforce(a, j, qq), tag + ": nu against brute force at q=" + std::to_string(qq));
    }
    detail = std::to_string(checks) + " checks on " + std::to_string(ctx.opts.random_ideals) + " ideals";
    if (failures) detail += ", " + std::to_string(failures) + " failed, first: " + first;
    return failures == 0;
}

bool criterion_periodicity(Context& ctx, std::string& detail)
{
    const auto& ex2 = ctx.get("ex2").ideal;
    const auto three = nu_periodicity(ex2, maximal_ideal(3), 3);
    const auto five = nu_periodicity(ex2, maximal_ideal(3), 5);
    detail = "p=3 period " + std::to_string(three.period) + ", p=5 period " + std::to_string(five.period);
    return three.period == 2 && five.period == 1;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream* live)
{
    Context ctx{opts};
    std::vector<CriterionResult> out;

    struct Entry {
        int id;
        std::string title;
        std::function<bool(std::string&)> body;
    };
    const std::vector<Entry> entries{
        {1, "ex2 roots {-3/4,-1,-5/4,-3/2} by both methods under 60 s",
         [&](std::string& d) { return both_methods(ctx, "ex2", 60, d); }},
        {2, "ex3 roots {-4/3,-3/2,-5/3,-2} by both methods under 120 s",
         [&](std::string& d) { return both_methods(ctx, "ex3", 120, d); }},
        {3, "pairwise products n=3,4,5 give {-n/2,-(n+1)/2,-(n-1)} under 300 s",
         [&](std::string& d) {
             bool ok = true;
             for (const char* name : {"ex1_n3", "ex1_n4", "ex1_n5"}) ok = both_methods(ctx, name, 300, d) && ok;
             return ok;
         }},
        {4, "roots mod Z equal the classes m/m_Q of the facets", [&](std::string& d) { return criterion_mod_z(ctx, d); }},
        {5, "largest root equals -lct", [&](std::string& d) { return criterion_lct(ctx, d); }},
        {6, "b(nu(p^e)) = 0 mod p for 5 <= p <= 97, e in {1,2}",
         [&](std::string& d) { return criterion_prop1(ctx, d); }},
        {7, "ex2 law: alpha 3/4, intercepts -3/4 and -5/4 within 3 runs",
         [&](std::string& d) { return criterion_law(ctx, d); }},
        {8, "random-ideal oracle suite", [&](std::string& d) { return criterion_oracles(ctx, d); }},
        {9, "ex2 periodicity: period 2 at p=3, period 1 at p=5",
         [&](std::string& d) { return criterion_periodicity(ctx, d); }},
    };
    const std::map<int, double> limits{{6, 60}, {8, 600}};

    for (const auto& e : entries) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.id) == opts.only.end()) continue;
        CriterionResult r;
        r.id = e.id;
        r.title = e.title;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.pass = e.body(r.detail);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail += std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (auto it = limits.find(e.id); it != limits.end() && r.seconds >= it->second) {
            r.pass = false;
            r.detail += " over time limit";
        }
        if (live) *live << format_result(r) << std::endl;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace bsroots
