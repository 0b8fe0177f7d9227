#pragma once

#include "bsroots/geometry.hpp"
#include "bsroots/ideal.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bsroots {

struct TraceEntry {
    Integer q;
    Integer tau;    // τ(qb − e)
    Rational tau_q; // τ_ℚ(qb − e)
};

/// Provenance of one root: cone, residue class, representative b and the
/// samples q ≡ 1 (mod N) that certified it.
struct RootCertificate {
    Rational root;
    std::size_t cone = 0;
    IntVector residue;
    IntVector representative;
    Rational correction;  // stabilised τ_ℚ(qb − e) − τ(qb − e)
    std::vector<TraceEntry> trace;
};

struct ConeCoverage {
    std::size_t cone = 0;
    std::size_t dim = 0;
    std::size_t realized = 0;
    Integer classes;  // Nⁿ
};

struct RootReport {
    std::vector<Rational> roots;  // distinct, in decreasing order
    std::map<Rational, std::vector<RootCertificate>> certificates;
    std::vector<Rational> mod_z_classes;  // increasing, in [0, 1)
    Integer modulus;
    std::vector<ConeCoverage> coverage;
    std::vector<std::string> warnings;
};

struct RootOptions {
    long box_multiplier = 2;
    std::size_t runs = 3;
    std::size_t budget = 64;
    bool parallel = true;
};

/// Samples q = q0, q0 + N, ... with q0 = N + 1 (or 2 when N = 1) and returns
/// the certificate once both τ(qb − e) − q·τ_ℚ(b) and the correction have
/// repeated `runs` times in a row. Throws BudgetExceededError otherwise.
RootCertificate correction_A(const MonomialIdeal& a, const NewtonPolyhedron& p, std::size_t cone,
                             const IntVector& residue, const IntVector& b, const Integer& modulus,
                             const RootOptions& opts = {});

/// Root set from every cone off the coordinate hyperplanes and every residue
/// class realized in the sampling box.
RootReport roots_charp(const MonomialIdeal& a, const RootOptions& opts = {});

/// {m / m_Q mod 1 : Q an ordinary facet, 0 ≤ m < m_Q}, increasing.
std::vector<Rational> roots_mod_Z(const MonomialIdeal& a);
std::vector<Rational> roots_mod_Z(const NewtonPolyhedron& p);
std::vector<Rational> roots_mod_Z(const std::vector<Facet>& facets);

/// Polynomial Π (s − root)^mult given by its roots.
using RootMultiset = std::vector<std::pair<Rational, unsigned>>;

/// Whether bpoly(ν^J_𝔞(p^e)) vanishes modulo p. Throws ModulusError when p
/// divides a root denominator.
bool verify_prop1(const MonomialIdeal& a, const MonomialIdeal& j, const Integer& p, unsigned e,
                  const RootMultiset& bpoly);

}  // namespace bsroots
