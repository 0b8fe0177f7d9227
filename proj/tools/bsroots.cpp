// Command-line front end: one subcommand per invariant, JSON on stdout.

#include "bsroots/acceptance.hpp"
#include "bsroots/errors.hpp"
#include "bsroots/io.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <iostream>

using namespace bsroots;

namespace {

struct Args {
    std::string ideal;
    std::string j;
    long long q = 0;
    std::string b;
    long long p = 0;
    long long e = 0;
    std::string bpoly;
    std::string method = "both";
    long k = 2;
    std::size_t runs = 3;
    bool verbose = false;
    int jobs = 0;
    bool inject_fault = false;
    std::size_t random_ideals = 200;
};

Json number(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return to_string(x);
}

MonomialIdeal target_j(const Args& args, const MonomialIdeal& a)
{
    return args.j.empty() ? maximal_ideal(a.nvars()) : load_ideal(args.j);
}

Integer prime_arg(long long p)
{
    bool prime = p > 1;
    for (long long d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (!prime) throw InputError("--p must be a prime");
    return p;
}

int run(const std::string& cmd, const Args& args)
{
    if (cmd == "selftest") {
        AcceptanceOptions opts;
        opts.corrupt_facet_modulus = args.inject_fault;
        opts.random_ideals = args.random_ideals;
        opts.parallel = args.jobs != 1;
        const auto results = run_acceptance(opts, &std::cout);
        const bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
        return ok ? 0 : 1;
    }

    if (args.ideal.empty()) throw InputError("--ideal is required");
    const MonomialIdeal a = load_ideal(args.ideal);
    const bool parallel = args.jobs != 1;
    Json out;

    if (cmd == "newton") {
        const NewtonPolyhedron p(a);
        out = newton_to_json(p, fan_cones(p), integrality_modulus(a));
    } else if (cmd == "lct") {
        out["lct"] = to_string(lct(a));
    } else if (cmd == "jumping") {
        out["jumping_number"] = to_string(jumping_number(a, parse_int_list(args.b)));
    } else if (cmd == "nu") {
        if (args.q < 1) throw InputError("--q must be positive");
        out["nu"] = number(nu(a, target_j(args, a), args.q));
    } else if (cmd == "fthreshold") {
        out["f_threshold"] = to_string(f_threshold(a, target_j(args, a)));
    } else if (cmd == "law") {
        LawOptions lo;
        lo.runs = args.runs;
        lo.parallel = parallel;
        out = law_to_json(quasi_linear_law(a, target_j(args, a), lo), args.verbose);
    } else if (cmd == "roots") {
        RootOptions ro;
        ro.box_multiplier = args.k;
        ro.runs = args.runs;
        ro.parallel = parallel;
        GammaOptions go;
        go.parallel = parallel;
        if (args.method == "charp") {
            out = root_report_to_json(roots_charp(a, ro), args.verbose);
        } else if (args.method == "gamma") {
            out = gamma_report_to_json(roots_gamma(a, go), args.verbose);
        } else {
            const RootReport c = roots_charp(a, ro);
            const GammaReport g = roots_gamma(a, go);
            out["roots"] = rationals_to_json(c.roots);
            out["agreement"] = c.roots == g.roots;
            if (args.verbose) {
                out["charp"] = root_report_to_json(c, true);
                out["gamma"] = gamma_report_to_json(g, true);
            }
            std::cout << out.dump() << "\n";
            return c.roots == g.roots ? 0 : 1;
        }
    } else if (cmd == "modz") {
        out["mod_z_classes"] = rationals_to_json(roots_mod_Z(a));
    } else if (cmd == "verify-prop1") {
        if (args.e < 1) throw InputError("--e must be positive");
        const Integer p = prime_arg(args.p);
        const MonomialIdeal j = target_j(args, a);
        out["nu"] = number(nu(a, j, boost::multiprecision::pow(p, static_cast<unsigned>(args.e))));
        out["holds"] = verify_prop1(a, j, p, static_cast<unsigned>(args.e), parse_bpoly(args.bpoly));
    } else if (cmd == "periodicity") {
        const std::size_t depth = args.e > 0 ? static_cast<std::size_t>(args.e) : 8;
        out = periodicity_to_json(nu_periodicity(a, target_j(args, a), prime_arg(args.p), depth));
    }
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact invariants and Bernstein-Sato roots of monomial ideals"};
    app.require_subcommand(1);
    Args args;

    auto add_ideal = [&](CLI::App* sub) { sub->add_option("--ideal", args.ideal, "ideal file or inline JSON")->required(); };
    auto add_j = [&](CLI::App* sub) { sub->add_option("--J", args.j, "target ideal J, file or inline JSON (default: maximal ideal)"); };
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--verbose", args.verbose, "include certificates and traces");
        sub->add_option("--jobs", args.jobs, "worker threads (1 = serial, 0 = all)");
    };

    auto* newton = app.add_subcommand("newton", "facets, fan cones and integrality modulus");
    auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold");
    auto* jumping = app.add_subcommand("jumping", "jumping coefficient for b");
    auto* nu_cmd = app.add_subcommand("nu", "nu^J(q)");
    auto* law = app.add_subcommand("law", "quasi-linear law of nu^J(q)");
    auto* fth = app.add_subcommand("fthreshold", "F-threshold with respect to J");
    auto* roots = app.add_subcommand("roots", "roots of the Bernstein-Sato polynomial");
    auto* modz = app.add_subcommand("modz", "classes of the roots modulo Z");
    auto* prop1 = app.add_subcommand("verify-prop1", "check b(nu(p^e)) = 0 mod p");
    auto* period = app.add_subcommand("periodicity", "eventual periodicity of nu(p^(e+1)) - p nu(p^e)");
    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

    for (auto* sub : {newton, lct_cmd, jumping, nu_cmd, law, fth, roots, modz, prop1, period}) {
        add_ideal(sub);
        add_common(sub);
    }
    for (auto* sub : {nu_cmd, law, fth, prop1, period}) add_j(sub);
    jumping->add_option("--b", args.b, "comma-separated positive integers")->required();
    nu_cmd->add_option("--q", args.q, "q >= 1")->required();
    law->add_option("--runs", args.runs, "consecutive equal intercepts required");
    roots->add_option("--method", args.method, "charp, gamma or both")
        ->check(CLI::IsMember({"charp", "gamma", "both"}));
    roots->add_option("--K", args.k, "sampling box multiplier")->check(CLI::PositiveNumber);
    roots->add_option("--runs", args.runs, "consecutive equal samples required");
    prop1->add_option("--p", args.p, "prime")->required();
    prop1->add_option("--e", args.e, "exponent e >= 1")->required();
    prop1->add_option("--bpoly", args.bpoly, "roots with multiplicities, e.g. -3/4,-5/4,-3/2,-1:3")->required();
    period->add_option("--p", args.p, "prime")->required();
    period->add_option("--e", args.e, "number of differences (default 8)");
    selftest->add_flag("--inject-fault", args.inject_fault, "corrupt a facet modulus (negative control)");
    selftest->add_option("--random-ideals", args.random_ideals, "size of the random oracle suite");
    selftest->add_option("--jobs", args.jobs, "worker threads (1 = serial, 0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (args.jobs > 0) omp_set_num_threads(args.jobs);
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cmd, args);
    } catch (const InputError& e) {
        std::cout << Json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        Json err{{"error", "domain"}, {"message", e.what()}};
        if (!e.detail().empty()) err["detail"] = Json::parse(e.detail(), nullptr, false);
        std::cout << err.dump() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
