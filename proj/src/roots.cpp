#include "bsroots/roots.hpp"

#include "bsroots/errors.hpp"
#include "bsroots/parallel.hpp"
#include "bsroots/thresholds.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace bsroots {

namespace mp = boost::multiprecision;

RootCertificate correction_A(const MonomialIdeal& a, const NewtonPolyhedron& p, std::size_t cone,
                             const IntVector& residue, const IntVector& b, const Integer& modulus,
                             const RootOptions& opts)
{
    if (opts.runs < 1) throw InputError("stabilisation needs at least one run");
    const std::size_t n = a.nvars();
    if (b.size() != n) throw InputError("representative has the wrong length");
    for (const auto& x : b)
        if (x < 1) throw InputError("representative must be positive");

    RootCertificate cert;
    cert.cone = cone;
    cert.residue = residue;
    cert.representative = b;
    const Rational slope = p.tau_q(to_rational(b));

    Integer q = modulus == 1 ? Integer(2) : Integer(modulus + 1);
    Rational last_root, last_corr;
    std::size_t streak = 0;
    for (std::size_t s = 0; s < opts.budget; ++s, q += modulus) {
        IntVector w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = q * b[i] - 1;
        TraceEntry t{q, tau(a, w), p.tau_q(to_rational(w))};
        Rational root = Rational(t.tau) - q * slope;
        Rational corr = t.tau_q - Rational(t.tau);
        cert.trace.push_back(std::move(t));
        if (streak > 0 && root == last_root && corr == last_corr) {
            ++streak;
        } else {
            streak = 1;
            last_root = std::move(root);
            last_corr = std::move(corr);
        }
        if (streak == opts.runs) {
            cert.root = last_root;
            cert.correction = last_corr;
            return cert;
        }
    }
    nlohmann::json detail = nlohmann::json::array();
    for (const auto& t : cert.trace) detail.push_back({t.q.str(), t.tau.str(), to_string(t.tau_q)});
    throw BudgetExceededError("root did not settle in cone " + std::to_string(cone), detail.dump());
}

std::vector<Rational> roots_mod_Z(const std::vector<Facet>& facets)
{
    std::set<Rational> classes;
    for (const auto& f : facets) {
        if (f.in_coordinate_hyperplane) continue;
        for (Integer m = 0; m < f.modulus; ++m) classes.insert(Rational(m, f.modulus));
    }
    return {classes.begin(), classes.end()};
}

std::vector<Rational> roots_mod_Z(const NewtonPolyhedron& p) { return roots_mod_Z(p.facets()); }

std::vector<Rational> roots_mod_Z(const MonomialIdeal& a) { return roots_mod_Z(NewtonPolyhedron(a)); }

RootReport roots_charp(const MonomialIdeal& a, const RootOptions& opts)
{
    const NewtonPolyhedron p(a);
    const auto cones = fan_cones(p);
    RootReport report;
    report.modulus = integrality_modulus(a);
    report.mod_z_classes = roots_mod_Z(p);
    const auto table = residue_table(p, report.modulus, opts.box_multiplier);

    struct Task {
        std::size_t cone;
        const IntVector* residue;
        const IntVector* rep;
    };
    std::vector<Task> tasks;
    const Integer total = mp::pow(report.modulus, static_cast<unsigned>(a.nvars()));
    for (std::size_t k = 0; k < cones.size(); ++k) {
        if (cones[k].in_coordinate_hyperplane) continue;
        report.coverage.push_back({k, cones[k].dim, table[k].size(), total});
        if (cones[k].maximal && Integer(table[k].size()) < total) {
            report.warnings.push_back("maximal cone " + std::to_string(k) + " realizes " +
                                      std::to_string(table[k].size()) + " of " + total.str() +
                                      " residue classes in the sampling box");
        }
        for (const auto& [c, b] : table[k]) tasks.push_back({k, &c, &b});
    }

    std::vector<RootCertificate> certs(tasks.size());
    for_each_index(tasks.size(), opts.parallel, [&](std::size_t t) {
        certs[t] = correction_A(a, p, tasks[t].cone, *tasks[t].residue, *tasks[t].rep, report.modulus, opts);
    });

    for (auto& c : certs) report.certificates[c.root].push_back(std::move(c));
    for (const auto& [root, list] : report.certificates) report.roots.push_back(root);
    std::reverse(report.roots.begin(), report.roots.end());
    return report;
}

bool verify_prop1(const MonomialIdeal& a, const MonomialIdeal& j, const Integer& p, unsigned e,
                  const RootMultiset& bpoly)
{
    if (p < 2) throw InputError("p must be at least 2");
    if (e < 1) throw InputError("e must be positive");
    for (const auto& [root, mult] : bpoly) {
        if (mp::denominator(root) % p == 0)
            throw ModulusError("prime " + p.str() + " divides the denominator of root " + to_string(root));
    }
    const Integer v = nu(a, j, mp::pow(p, e));
    Rational value = 1;
    for (const auto& [root, mult] : bpoly)
        for (unsigned k = 0; k < mult; ++k) value *= Rational(v) - root;
    return mod_prime(value, p) == 0;
}

}  // namespace bsroots
