// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include "bsroots/acceptance.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"acceptance suite"};
    bsroots::AcceptanceOptions opts;
    app.add_flag("--inject-fault", opts.corrupt_facet_modulus, "corrupt a facet modulus");
    app.add_option("--only", opts.only, "criteria to run");
    app.add_option("--random-ideals", opts.random_ideals, "size of the random oracle suite");
    bool serial = false;
    app.add_flag("--serial", serial, "disable OpenMP kernels");
    CLI11_PARSE(app, argc, argv);
    opts.parallel = !serial;

    const auto results = bsroots::run_acceptance(opts, &std::cout);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    return ok ? 0 : 1;
}
