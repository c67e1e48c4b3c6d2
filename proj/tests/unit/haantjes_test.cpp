#include <gtest/gtest.h>

#include "htk/haantjes.hpp"
#include "htk/killing.hpp"
#include "htk/random.hpp"
#include "oracles.hpp"

namespace htk {
namespace {

using testing::from_vf;
using testing::haantjes_vf;
using testing::nijenhuis_vf;
using testing::P_;

TEST(Haantjes, CubicHessianMatchesVectorFieldOracle) {
    const OperatorField a(hessian_operator(P_("x1^3 + x1*x2*x3"), 3));
    EXPECT_EQ(nijenhuis(a), from_vf(a.tensor(), nijenhuis_vf));
    EXPECT_EQ(haantjes(a), from_vf(a.tensor(), haantjes_vf));
    EXPECT_FALSE(is_haantjes_zero(a).zero);
}

TEST(Haantjes, SingleCubeIsZero) {
    const OperatorField a(hessian_operator(P_("x1^3"), 3));
    EXPECT_TRUE(nijenhuis(a).is_zero());
    EXPECT_TRUE(is_haantjes_zero(a).zero);
}

TEST(Haantjes, HessianNijenhuisClosedForm) {
    // For A = Hess f: N^i_jk = sum_a (f_{,ika} f_{,aj} - f_{,aij} f_{,ak}).
    RandomPolys rnd(11);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + trial % 2;
        const Poly f = rnd.poly(position_variables(n), 4, 5);
        const OperatorField a(hessian_operator(f, n));
        const TensorField nij = nijenhuis(a);
        auto d = [&](std::initializer_list<int> idx) {
            Poly g = f;
            for (int i : idx) g = differentiate(g, X(i + 1));
            return g;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Poly expect;
                    for (int s = 0; s < n; ++s) expect += d({i, k, s}) * d({s, j}) - d({s, i, j}) * d({s, k});
                    EXPECT_EQ(nij.at({i, j, k}), expect) << f;
                }
    }
}

TEST(Haantjes, HessianConservationLaws) {
    RandomPolys rnd(5);
    for (int n = 2; n <= 4; ++n) {
        const Poly f = rnd.poly(position_variables(n), 3, 4);
        const OperatorField a(hessian_operator(f, n));
        Poly r2;
        for (int i = 1; i <= n; ++i) r2 += Poly(X(i), 2);
        EXPECT_TRUE(conservation_check(a, r2).is_conservation_law()) << f;
        for (int i = 1; i <= n; ++i) EXPECT_TRUE(conservation_check(a, Poly(X(i))).is_conservation_law());
    }
    const OperatorField skew(TensorField::from_matrix({{P_("0"), P_("x1")}, {P_("0"), P_("0")}}, {Slot::up, Slot::down}));
    EXPECT_FALSE(conservation_check(skew, P_("x1")).is_conservation_law());
}

TEST(Haantjes, IdentityAndConstantOperators) {
    EXPECT_TRUE(nijenhuis(OperatorField(TensorField::identity_operator(4))).is_zero());
    RandomPolys rnd(2);
    TensorField c(3, {Slot::up, Slot::down});
    for (std::size_t k = 0; k < c.size(); ++k) c.flat(k) = Poly(rnd.coefficient());
    EXPECT_TRUE(haantjes(OperatorField(c)).is_zero());
}

class TorsionProperties : public ::testing::TestWithParam<int> {};

TEST_P(TorsionProperties, AntisymmetryAndScaling) {
    RandomPolys rnd(1000 + static_cast<std::uint64_t>(GetParam()));
    const int n = 2 + GetParam() % 2;
    const OperatorField a(rnd.operator_field(n, 2, 2));
    const TensorField nij = nijenhuis(a);
    const TensorField h = haantjes_from_nijenhuis(a, nij);
    EXPECT_EQ(h, haantjes(a));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                EXPECT_EQ(nij.at({i, j, k}), -nij.at({i, k, j}));
                EXPECT_EQ(h.at({i, j, k}), -h.at({i, k, j}));
            }
    const Rational c = rnd.coefficient();
    const OperatorField ca(a.tensor() * Poly(c));
    EXPECT_EQ(nijenhuis(ca), nij * Poly(c * c));
    EXPECT_EQ(haantjes(ca), h * Poly(c * c * c * c));
}

TEST_P(TorsionProperties, HaantjesVanishesInDimensionTwo) {
    for (int rep = 0; rep < 5; ++rep) {
        RandomPolys rnd(5000 + 10 * static_cast<std::uint64_t>(GetParam()) + static_cast<std::uint64_t>(rep));
        const OperatorField a(rnd.operator_field(2, 2, 3));
        EXPECT_TRUE(haantjes(a).is_zero()) << to_json(a.tensor()).dump();
    }
}

INSTANTIATE_TEST_SUITE_P(Random, TorsionProperties, ::testing::Range(0, 10));

TEST(Haantjes, DiagonalKillingTensorIsZero) {
    auto k = catalog::symmetric_matrix({{"b1", "0", "0"}, {"0", "b2", "0"}, {"0", "0", "b3"}});
    EXPECT_TRUE(is_haantjes_zero(OperatorField::from_covariant(k)).zero);
}

TEST(Haantjes, WitnessHasDistinctLowerIndices) {
    auto k = catalog::get("sw1").reference_family.value();
    const Bindings b{{B(1), P_("0")}, {B(2), P_("0")}, {B(3), P_("1")},
                     {B(4), P_("1")}, {B(5), P_("1")}, {B(6), P_("2")}};
    auto res = is_haantjes_zero(OperatorField::from_covariant(k.map([&](const Poly& p) { return substitute(p, b); })));
    ASSERT_FALSE(res.zero);
    ASSERT_TRUE(res.witness);
    EXPECT_NE(res.witness->index[1], res.witness->index[2]);
    EXPECT_FALSE(res.witness->value.is_zero());
}

TEST(Haantjes, FromCovariantRaisesWithMetric) {
    auto k = catalog::symmetric_matrix({{"x1", "1"}, {"1", "x2"}});
    const OperatorField e = OperatorField::from_covariant(k);
    const OperatorField m = OperatorField::from_covariant(k, Metric(2, {-1, 1}));
    EXPECT_EQ(e(0, 1), Poly(1L));
    EXPECT_EQ(m(0, 1), Poly(-1L));
    EXPECT_EQ(m(1, 1), P_("x2"));
}

}  // namespace
}  // namespace htk
