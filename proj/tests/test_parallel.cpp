#include "bsroots/acceptance.hpp"
#include "bsroots/gamma.hpp"
#include "bsroots/parallel.hpp"
#include "bsroots/thresholds.hpp"

#include <gtest/gtest.h>
#include <omp.h>

#include <stdexcept>

using namespace bsroots;

namespace {

struct ThreadCount {
    explicit ThreadCount(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadCount() { omp_set_num_threads(saved); }
    int saved;
};

bool same_witnesses(const GammaReport& x, const GammaReport& y)
{
    if (x.witnesses.size() != y.witnesses.size()) return false;
    for (const auto& [root, w] : x.witnesses) {
        const auto it = y.witnesses.find(root);
        if (it == y.witnesses.end() || it->second.gens != w.gens || it->second.vars != w.vars ||
            it->second.alpha != w.alpha || it->second.beta != w.beta)
            return false;
    }
    return true;
}

}  // namespace

TEST(Parallel, LowestFailingIndexWins)
{
    ThreadCount four(4);
    try {
        for_each_index(64, true, [](std::size_t k) {
            if (k % 7 == 3) throw std::runtime_error(std::to_string(k));
        });
        FAIL() << "no exception";
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "3");
    }
}

TEST(Parallel, KernelsMatchSerialReferences)
{
    ThreadCount four(4);
    for (const auto& s : shipped_ideals()) {
        if (s.ideal.nvars() > 4) continue;
        const MonomialIdeal& a = s.ideal;
        EXPECT_EQ(integrality_modulus(a), integrality_modulus_serial(a)) << s.name;

        const NewtonPolyhedron p(a);
        const Integer n_mod = integrality_modulus(a);
        const auto threaded = residue_table(p, n_mod, 1);
        std::vector<ResidueMap> single;
        {
            ThreadCount one(1);
            single = residue_table(p, n_mod, 1);
        }
        EXPECT_EQ(threaded, single) << s.name;

        RootOptions serial_roots, parallel_roots;
        serial_roots.parallel = false;
        const RootReport rs = roots_charp(a, serial_roots), rp = roots_charp(a, parallel_roots);
        EXPECT_EQ(rs.roots, rp.roots) << s.name;
        EXPECT_EQ(rs.warnings, rp.warnings) << s.name;
        ASSERT_EQ(rs.certificates.size(), rp.certificates.size());
        for (const auto& [root, certs] : rs.certificates) {
            const auto& other = rp.certificates.at(root);
            ASSERT_EQ(certs.size(), other.size());
            for (std::size_t k = 0; k < certs.size(); ++k) EXPECT_EQ(certs[k].representative, other[k].representative);
        }

        GammaOptions serial_gamma, parallel_gamma;
        serial_gamma.parallel = false;
        const GammaReport gs = roots_gamma(a, serial_gamma), gp = roots_gamma(a, parallel_gamma);
        EXPECT_EQ(gs.roots, gp.roots) << s.name;
        EXPECT_TRUE(same_witnesses(gs, gp)) << s.name;

        LawOptions serial_law, parallel_law;
        serial_law.parallel = false;
        const MonomialIdeal m = maximal_ideal(a.nvars());
        const QuasiLinearLaw ls = quasi_linear_law(a, m, serial_law), lp = quasi_linear_law(a, m, parallel_law);
        EXPECT_EQ(ls.intercepts, lp.intercepts) << s.name;
        EXPECT_EQ(ls.q_min, lp.q_min) << s.name;
    }
}
