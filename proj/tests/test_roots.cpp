#include "bsroots/errors.hpp"
#include "bsroots/roots.hpp"

#include <gtest/gtest.h>

using namespace bsroots;

namespace {

const MonomialIdeal ex1_n3(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
const MonomialIdeal ex2(3, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
const MonomialIdeal ex3(4, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});

std::vector<Rational> descending(std::initializer_list<Rational> xs)
{
    std::vector<Rational> v(xs);
    std::sort(v.rbegin(), v.rend());
    return v;
}

const RootMultiset ex2_bpoly{{Rational(-3, 4), 1}, {Rational(-5, 4), 1}, {Rational(-3, 2), 1}, {Rational(-1), 3}};

}  // namespace

TEST(Correction, DiagonalAndLine)
{
    const NewtonPolyhedron p(ex2);
    const std::size_t diagonal = locate_cone(p, {1, 1, 1});
    const RootCertificate c = correction_A(ex2, p, diagonal, {0, 0, 0}, {1, 1, 1}, 12);
    EXPECT_EQ(c.correction, 0);
    EXPECT_EQ(c.root, Rational(-3, 4));

    const RootCertificate far = correction_A(ex2, p, diagonal, {2, 2, 2}, {3, 3, 3}, 12);
    EXPECT_GE(far.correction, 0);
    EXPECT_GE(far.trace.size(), 3u);

    const MonomialIdeal x(1, {{1}});
    const NewtonPolyhedron line(x);
    const RootCertificate l = correction_A(x, line, 1, {0}, {1}, 1);
    EXPECT_EQ(l.correction, 0);
    EXPECT_EQ(l.root, -1);
}

TEST(RootsCharp, ShippedIdeals)
{
    EXPECT_EQ(roots_charp(ex2).roots, descending({Rational(-3, 4), -1, Rational(-5, 4), Rational(-3, 2)}));
    EXPECT_EQ(roots_charp(ex3).roots, descending({Rational(-4, 3), Rational(-3, 2), Rational(-5, 3), -2}));
    EXPECT_EQ(roots_charp(ex1_n3).roots, descending({Rational(-3, 2), -2}));
    EXPECT_EQ(roots_charp(MonomialIdeal(1, {{2}})).roots, descending({Rational(-1, 2), -1}));
}

TEST(RootsCharp, CorrectionDecreasesAlongTrace)
{
    for (const MonomialIdeal& a : {ex1_n3, ex2, ex3}) {
        const RootReport r = roots_charp(a);
        for (const auto& [root, certs] : r.certificates)
            for (const auto& cert : certs) {
                ASSERT_FALSE(cert.trace.empty());
                Rational previous = cert.trace.front().tau_q - Rational(cert.trace.front().tau);
                for (const auto& t : cert.trace) {
                    const Rational delta = t.tau_q - Rational(t.tau);
                    EXPECT_GE(delta, 0);
                    EXPECT_LE(delta, previous) << "root " << to_string(root) << " q " << to_string(t.q);
                    previous = delta;
                }
            }
    }
}

TEST(RootsCharp, IndependentOfRepresentative)
{
    for (const MonomialIdeal& a : {ex1_n3, ex2}) {
        const NewtonPolyhedron p(a);
        const RootReport r = roots_charp(a);
        for (const auto& [root, certs] : r.certificates)
            for (const auto& cert : certs) {
                // b + N·b lies in the same open cone and the same class
                IntVector other = cert.representative;
                for (auto& x : other) x *= r.modulus + 1;
                EXPECT_EQ(locate_cone(p, to_rational(other)), cert.cone);
                const RootCertificate again = correction_A(a, p, cert.cone, cert.residue, other, r.modulus);
                EXPECT_EQ(again.root, root);
            }
    }
}

TEST(RootsCharp, ClassesModZ)
{
    for (const MonomialIdeal& a : {ex1_n3, ex2, ex3}) {
        const RootReport r = roots_charp(a);
        std::set<Rational> reduced;
        for (const auto& root : r.roots) reduced.insert(frac(root));
        const auto classes = roots_mod_Z(a);
        EXPECT_EQ(reduced, std::set<Rational>(classes.begin(), classes.end()));
    }
}

TEST(ModZ, Examples)
{
    EXPECT_EQ(roots_mod_Z(ex2), (std::vector<Rational>{0, Rational(1, 4), Rational(1, 2), Rational(3, 4)}));
    EXPECT_EQ(roots_mod_Z(ex3), (std::vector<Rational>{0, Rational(1, 3), Rational(1, 2), Rational(2, 3)}));
    EXPECT_EQ(roots_mod_Z(MonomialIdeal(1, {{3}})), (std::vector<Rational>{0, Rational(1, 3), Rational(2, 3)}));
}

TEST(Prop1, Congruences)
{
    EXPECT_TRUE(verify_prop1(ex2, maximal_ideal(3), 5, 1, ex2_bpoly));
    EXPECT_TRUE(verify_prop1(ex2, maximal_ideal(3), 7, 1, ex2_bpoly));
    EXPECT_TRUE(verify_prop1(ex2, maximal_ideal(3), 7, 2, ex2_bpoly));
    EXPECT_FALSE(verify_prop1(ex2, maximal_ideal(3), 5, 1, {}));
    EXPECT_THROW(verify_prop1(ex2, maximal_ideal(3), 2, 1, ex2_bpoly), ModulusError);
}
