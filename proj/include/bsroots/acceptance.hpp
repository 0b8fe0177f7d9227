#pragma once

#include "bsroots/ideal.hpp"
#include "bsroots/roots.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace bsroots {

/// A worked example shipped with the library, with its known b-function.
struct ShippedIdeal {
    std::string name;
    MonomialIdeal ideal;
    std::vector<Rational> roots;  // decreasing
    RootMultiset bpoly;
};

/// ex2, ex3 and the pairwise-product ideals for n = 3, 4, 5.
std::vector<ShippedIdeal> shipped_ideals();

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    bool corrupt_facet_modulus = false;  // negative control for criterion 4
    std::size_t random_ideals = 200;
    std::uint32_t seed = 20240611;
    bool parallel = true;
    std::vector<int> only;  // empty means all nine
};

/// Runs the criteria in order; each line is also written to `live` as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream* live = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace bsroots
