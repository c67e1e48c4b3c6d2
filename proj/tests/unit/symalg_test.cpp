#include <gtest/gtest.h>

#include "htk/random.hpp"
#include "oracles.hpp"

namespace htk {
namespace {

using testing::P_;

TEST(Poly, ParsePrintRoundTrip) {
    for (const char* s : {"2*x1^3 - 2*x1*x2^2", "x1^-2", "3/4*b1*b2 + 1", "-p1^2 + a0*x1^2", "0"}) {
        Poly p = P_(s);
        EXPECT_EQ(Poly::parse(p.to_string()), p) << s;
    }
    EXPECT_EQ(P_("2*x1^3 - 2*x1*x2^2").to_string(), "2*x1^3 - 2*x1*x2^2");
}

TEST(Poly, ParseErrors) {
    EXPECT_THROW(P_("x1^^2"), ParseError);
    EXPECT_THROW(P_("y1"), ParseError);
    EXPECT_THROW(P_("x1 +"), ParseError);
    EXPECT_THROW(P_("b1^-1"), SymalgError);
}

TEST(Poly, Arithmetic) {
    EXPECT_EQ(P_("x1 + x2") * P_("x1 - x2"), P_("x1^2 - x2^2"));
    EXPECT_EQ(P_("x1^-2") * P_("x1^3"), P_("x1"));
    EXPECT_EQ(Poly(2L) * P_("x1") * P_("x1^2 - x2^2"), P_("2*x1^3 - 2*x1*x2^2"));
    EXPECT_EQ(pow(P_("x1 + 1"), 3), P_("x1^3 + 3*x1^2 + 3*x1 + 1"));
    EXPECT_TRUE((P_("x1") - P_("x1")).is_zero());
}

TEST(Poly, Differentiate) {
    EXPECT_EQ(differentiate(P_("x1^3"), X(1)), P_("3*x1^2"));
    EXPECT_EQ(differentiate(P_("x1^-2"), X(1)), P_("-2*x1^-3"));
    EXPECT_EQ(differentiate(P_("x1^2 + x2^2 + x3^2"), X(2)), P_("2*x2"));
    // x1^-2 * x1^2 = 1, so the product rule must cancel.
    Poly f = P_("x1^-2"), g = P_("x1^2");
    EXPECT_TRUE((differentiate(f, X(1)) * g + f * differentiate(g, X(1))).is_zero());
}

TEST(Poly, Substitute) {
    const Poly j = P_("b2*b4*b5 - b3*b4*b5 - b1*b4*b6 + b3*b4*b6 + b1*b5*b6 - b2*b5*b6");
    EXPECT_TRUE(substitute(j, Bindings{{B(6), Poly()}, {B(3), Poly(B(2))}}).is_zero());
    EXPECT_EQ(substitute(P_("x1^2 + x1"), Bindings{{X(1), Poly(X(1))}}), P_("x1^2 + x1"));
    Assignment b{{B(1), 0}, {B(2), 0}, {B(3), 1}, {B(4), 2}, {B(5), 2}, {B(6), 4}};
    EXPECT_EQ(j.evaluate(b), Rational(4));
    EXPECT_THROW(substitute(P_("x1^-2"), Bindings{{X(1), P_("x1 + 1")}}), NonInvertibleSubstitution);
    EXPECT_EQ(substitute(P_("x1^-2"), Bindings{{X(1), P_("2*x2")}}), P_("1/4*x2^-2"));
}

TEST(Poly, Collect) {
    auto c = collect(P_("b1*x1^2 + b2*x1^2"), {Space::x});
    ASSERT_EQ(c.size(), 1U);
    EXPECT_EQ(c.begin()->first, Monomial(X(1), 2));
    EXPECT_EQ(c.begin()->second, P_("b1 + b2"));
    EXPECT_TRUE(collect(Poly(), {Space::x}).empty());
}

TEST(Poly, LaurentIntegrate) {
    EXPECT_EQ(laurent_integrate(P_("2*x1"), X(1)), P_("x1^2"));
    EXPECT_EQ(laurent_integrate(P_("-2*x1^-3"), X(1)), P_("x1^-2"));
    EXPECT_THROW(laurent_integrate(P_("x1^-1"), X(1)), LogarithmicTerm);
}

TEST(Poly, Evaluate) {
    EXPECT_EQ(P_("x1^-2 + x2").evaluate({{X(1), Rational(1, 2)}, {X(2), 3}}), Rational(7));
    EXPECT_THROW(P_("x1^-2").evaluate({{X(1), 0}}), SymalgError);
    EXPECT_THROW(P_("x1").evaluate({}), SymalgError);
}

class PolyProperties : public ::testing::TestWithParam<int> {};

TEST_P(PolyProperties, RingAxioms) {
    RandomPolys gen(1000 + GetParam());
    std::vector<VarId> vars{X(1), X(2), B(1)};
    for (int t = 0; t < 20; ++t) {
        Poly f = gen.poly(vars, 3, 4, t % 3 == 0 ? -2 : 0);
        Poly g = gen.poly(vars, 3, 4, t % 3 == 0 ? -2 : 0);
        Poly h = gen.poly(vars, 3, 4);
        EXPECT_EQ(f + g, g + f);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ((f + g) + h, f + (g + h));
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ(f - f, Poly());
        EXPECT_EQ(f * Poly(1L), f);
    }
}

TEST_P(PolyProperties, LeibnizRule) {
    RandomPolys gen(2000 + GetParam());
    std::vector<VarId> vars{X(1), X(2), P(1)};
    for (int t = 0; t < 20; ++t) {
        Poly f = gen.poly(vars, 3, 4, -2), g = gen.poly(vars, 3, 4, -2);
        for (auto v : vars)
            EXPECT_EQ(differentiate(f * g, v), differentiate(f, v) * g + f * differentiate(g, v));
    }
}

TEST_P(PolyProperties, IntegrationInvertsDifferentiation) {
    RandomPolys gen(3000 + GetParam());
    std::vector<VarId> vars{X(1), X(2)};
    for (int t = 0; t < 20; ++t) {
        Poly f = gen.poly(vars, 3, 4, -3);
        Poly i;
        try {
            i = laurent_integrate(f, X(1));
        } catch (const LogarithmicTerm&) {
            bool has_inverse = false;
            for (const auto& [m, c] : f.terms()) has_inverse = has_inverse || m.degree(X(1)) == -1;
            EXPECT_TRUE(has_inverse);
            continue;
        }
        EXPECT_EQ(differentiate(i, X(1)), f);
    }
}

TEST_P(PolyProperties, EvaluationIsAHomomorphism) {
    RandomPolys gen(4000 + GetParam());
    std::vector<VarId> vars{X(1), X(2)};
    for (int t = 0; t < 20; ++t) {
        Poly f = gen.poly(vars, 3, 4, -1), g = gen.poly(vars, 3, 4, -1);
        Assignment at{{X(1), gen.coefficient()}, {X(2), gen.coefficient()}};
        EXPECT_EQ((f * g).evaluate(at), f.evaluate(at) * g.evaluate(at));
        EXPECT_EQ((f + g).evaluate(at), f.evaluate(at) + g.evaluate(at));
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PolyProperties, ::testing::Range(0, 5));

}  // namespace
}  // namespace htk
