#include <gtest/gtest.h>

#include "htk/haantjes.hpp"
#include "htk/mechanics.hpp"
#include "htk/random.hpp"
#include "oracles.hpp"

namespace htk {
namespace {

using testing::P_;

PhaseFunction F(int n, const char* s) { return PhaseFunction(n, P_(s)); }

KillingFamily family_of(const std::string& name) {
    const auto spec = catalog::get(name);
    return compatible_family(killing_space(spec.dim), spec);
}

TEST(Poisson, CanonicalBrackets) {
    EXPECT_EQ(poisson(F(2, "p1"), F(2, "x1")).poly(), Poly(1L));
    EXPECT_EQ(poisson(F(2, "x1"), F(2, "p1")).poly(), Poly(-1L));
    EXPECT_TRUE(poisson(F(2, "p1"), F(2, "x2")).poly().is_zero());
    EXPECT_EQ(poisson(F(2, "p1^2"), F(2, "x1^-1")).poly(), P_("-2*p1*x1^-2"));
}

class PoissonProperties : public ::testing::TestWithParam<int> {};

TEST_P(PoissonProperties, LieAlgebraAxioms) {
    RandomPolys rnd(700 + static_cast<std::uint64_t>(GetParam()));
    const int n = 2;
    std::vector<VarId> vars = position_variables(n);
    for (auto v : momentum_variables(n)) vars.push_back(v);
    auto next = [&] { return PhaseFunction(n, rnd.poly(vars, 3, 3)); };
    const auto f = next(), g = next(), h = next();
    const Rational c = rnd.coefficient();
    EXPECT_EQ(poisson(f, g).poly(), -poisson(g, f).poly());
    EXPECT_EQ(poisson(PhaseFunction(n, f.poly() * c + g.poly()), h).poly(),
              poisson(f, h).poly() * c + poisson(g, h).poly());
    EXPECT_EQ(poisson(PhaseFunction(n, f.poly() * g.poly()), h).poly(),
              f.poly() * poisson(g, h).poly() + g.poly() * poisson(f, h).poly());
    const Poly jacobi = poisson(f, poisson(g, h)).poly() + poisson(g, poisson(h, f)).poly() +
                        poisson(h, poisson(f, g)).poly();
    EXPECT_TRUE(jacobi.is_zero());
}

INSTANTIATE_TEST_SUITE_P(Random, PoissonProperties, ::testing::Range(0, 8));

TEST(Integrals, MetricGivesHamiltonian) {
    const auto spec = catalog::get("sw1");
    const auto g = catalog::symmetric_matrix({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    EXPECT_EQ(build_integral(g, spec), hamiltonian(3, spec.potential()));
}

TEST(Integrals, SmorodinskiWinternitzElements) {
    const auto spec = catalog::get("sw1");
    const auto fam = family_of("sw1");
    const PhaseFunction h = hamiltonian(3, spec.potential());
    const auto f1 = build_integral(fam.basis()[0], spec);
    EXPECT_EQ(f1.poly(), P_("p1^2 + a1*x1^-2 + a0*x1^2"));
    const auto f5 = build_integral(fam.basis()[4], spec);
    EXPECT_EQ(f5.poly(), pow(P_("x3*p1 - x1*p3"), 2) + P_("x3^2*a1*x1^-2 + x1^2*a3*x3^-2"));
    for (const auto& k : fam.basis()) EXPECT_TRUE(poisson(h, build_integral(k, spec)).poly().is_zero());

    const auto bound = build_integral(fam.basis()[0], spec, {{A(0), P_("3")}, {A(1), P_("0")}});
    EXPECT_EQ(bound.poly(), P_("p1^2 + 3*x1^2"));
}

TEST(Integrals, IncompatibleTensorRejected) {
    const auto spec = catalog::get("sw1");
    const auto k = catalog::symmetric_matrix({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}});
    EXPECT_THROW(build_integral(k, spec), NotCompatible);
}

TEST(Integrals, DualDifferentialIsClosedForCompatibleFamily) {
    for (const std::string name : {"sw1", "oo", "iv"}) {
        const auto spec = catalog::get(name);
        const auto fam = family_of(name);
        for (const auto& k : fam.basis())
            for (const auto& u : spec.generators()) {
                const TensorField w = dual_differential(k, u);
                EXPECT_TRUE(sym_antisym(partial_derivative(w), {0, 1}, SymMode::antisym).is_zero()) << name;
            }
    }
}

TEST(Independence, KnownRanks) {
    SamplePoints rng(1);
    auto r1 = functional_independence({F(2, "p1^2 + p2^2 + x1^2"), F(2, "2*p1^2 + 2*p2^2 + 2*x1^2")}, 5, rng);
    EXPECT_EQ(r1.rank, 1);
    EXPECT_TRUE(r1.stable());
    auto r2 = functional_independence({F(2, "p1^2"), F(2, "p2^2"), F(2, "p1^2 + p2^2")}, 5, rng);
    EXPECT_EQ(r2.rank, 2);
    auto r3 = functional_independence({F(2, "p1 + a1*x1"), F(2, "p2")}, 5, rng);
    EXPECT_EQ(r3.rank, 2);
    EXPECT_EQ(r3.trial_ranks.size(), 5U);
}

TEST(Independence, SampleValuesAreNonzeroAndBounded) {
    SamplePoints rng(9);
    for (int i = 0; i < 200; ++i) {
        const Rational v = rng.value();
        EXPECT_NE(v, 0);
        EXPECT_LE(abs(v.get_num()), 20);
        EXPECT_LE(v.get_den(), 7);
    }
}

TEST(StructuralTensor, ConstantFamilyIsZero) {
    const auto vs = flat_killing_vectors(2);
    std::vector<TensorField> basis{symmetric_product(vs[0], vs[0]), symmetric_product(vs[0], vs[1]),
                                   symmetric_product(vs[1], vs[1])};
    const KillingFamily fam(2, b_variables(3), basis);
    const std::vector<Rational> x0{Rational(1), Rational(2)};
    EXPECT_TRUE(structural_tensor_at(fam, x0).is_zero());
}

TEST(StructuralTensor, ReproducesDerivativesOfEveryElement) {
    const auto fam = family_of("sw1");
    const std::vector<Rational> x0{Rational(1), Rational(2), Rational(3)};
    const auto p = structural_tensor_at(fam, x0);
    for (const auto& k : fam.basis()) {
        const auto kv = evaluate(k, x0);
        const auto dk = evaluate(partial_derivative(k), x0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int c = 0; c < 3; ++c) {
                    Rational sum = 0;
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b) sum += p(a, b, i, j, c) * kv.at({a, b});
                    EXPECT_EQ(sum, dk.at({i, j, c}));
                }
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) EXPECT_EQ(p(a, b, 0, 1, 2), p(b, a, 1, 0, 2));
    }
}

TEST(StructuralTensor, Failures) {
    const std::vector<Rational> x0{Rational(1), Rational(1)};
    const KillingFamily metric_only(2, {B(1)}, {catalog::symmetric_matrix({{"1", "0"}, {"0", "1"}})});
    EXPECT_THROW(structural_tensor_at(metric_only, x0), NonUniqueSolution);
    const KillingFamily full(2, b_variables(6), killing_space(2).elements);
    EXPECT_THROW(structural_tensor_at(full, x0), Inconsistent);
}

TEST(Abundant, MatchesDirectTorsion) {
    const auto fam = family_of("sw1");
    RandomPolys rnd(4);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> x0;
        for (int i = 0; i < 3; ++i) {
            Rational q(rnd.integer(1, 5), rnd.integer(1, 3));
            q.canonicalize();
            x0.push_back(q);
        }
        const auto p = structural_tensor_at(fam, x0);
        Bindings b;
        for (auto v : fam.params()) b[v] = Poly(rnd.coefficient());
        const TensorField k = specialize(fam, b);
        const TensorValue direct = evaluate(haantjes(OperatorField::from_covariant(k)), x0);
        EXPECT_EQ(abundant_haantjes(p, k, x0), direct);
    }
}

TEST(Abundant, ZeroStructuralTensorGivesZero) {
    const auto fam = family_of("oscillator");
    const std::vector<Rational> x0{Rational(1), Rational(-2), Rational(1, 3)};
    const auto p = structural_tensor_at(fam, x0);
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(abundant_haantjes(p, fam.components().map([](const Poly& f) {
        return substitute(f, Bindings{{B(1), P_("1")}, {B(2), P_("2")}, {B(3), P_("3")},
                                      {B(4), P_("4")}, {B(5), P_("5")}, {B(6), P_("6")}});
    }), x0).is_zero());
}

TEST(Condition6b, Examples) {
    const auto diag = catalog::symmetric_matrix({{"1", "0", "0"}, {"0", "2", "0"}, {"0", "0", "3"}});
    const auto d = condition_6b(diag);
    EXPECT_TRUE(d.holds);
    EXPECT_TRUE(d.holds_unnormalized);
    EXPECT_FALSE(d.witness);

    const auto k = specialize(family_of("sw1"), {{B(1), P_("0")}, {B(2), P_("0")}, {B(3), P_("1")},
                                                  {B(4), P_("2")}, {B(5), P_("2")}, {B(6), P_("4")}});
    const auto e = condition_6b(k);
    EXPECT_FALSE(e.holds);
    ASSERT_TRUE(e.witness);
    EXPECT_FALSE(e.residual[*e.witness].is_zero());

    EXPECT_THROW(condition_6b(catalog::symmetric_matrix({{"1", "1", "0"}, {"1", "1", "0"}, {"0", "0", "x1"}})),
                 DegenerateK);
}

TEST(Determinant, AdjugateIdentity) {
    const auto k = *catalog::get("iv").reference_family;
    const Poly det = determinant(k);
    const TensorField adj = adjugate(k);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Poly s;
            for (int a = 0; a < 3; ++a) s += k.at({i, a}) * adj.at({a, j});
            EXPECT_EQ(s, i == j ? det : Poly());
        }
}

}  // namespace
}  // namespace htk
