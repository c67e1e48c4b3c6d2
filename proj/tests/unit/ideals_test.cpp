#include <gtest/gtest.h>

#include <algorithm>

#include "htk/ideals.hpp"
#include "htk/random.hpp"
#include "oracles.hpp"

namespace htk {
namespace {

using testing::P_;

MonomialOrder order(int m) { return MonomialOrder::grevlex(b_variables(m)); }

std::vector<Poly> polys(std::initializer_list<const char*> ss) {
    std::vector<Poly> out;
    for (const char* s : ss) out.push_back(P_(s));
    return out;
}

const Poly& sw1_j() {
    static const Poly j = *catalog::get("sw1").radical_generator;
    return j;
}

TEST(Groebner, SmallExamples) {
    EXPECT_EQ(groebner(Ideal(polys({"b1^2", "b1*b2 - b1"}), order(2))), polys({"b1^2", "b1*b2 - b1"}));
    EXPECT_EQ(groebner(Ideal(polys({"b1", "b2"}), order(2))), polys({"b1", "b2"}));
    EXPECT_EQ(groebner(Ideal(polys({"b1 + 1", "b1"}), order(2))), polys({"1"}));
    EXPECT_EQ(groebner(Ideal(polys({"2*b1*b2 + 4*b2"}), order(2))), polys({"b1*b2 + 2*b2"}));
}

TEST(Groebner, OrderComparisons) {
    const auto g = order(3);
    const auto l = MonomialOrder::lex(b_variables(3));
    auto m = [](const char* s) { return P_(s).terms().front().first; };
    EXPECT_EQ(g.compare(m("b3^2"), m("b1*b2*b3")), std::strong_ordering::less);
    EXPECT_EQ(l.compare(m("b3^2"), m("b1*b2*b3")), std::strong_ordering::greater);
    // grevlex: equal degree, a smaller exponent in the smallest variable wins
    EXPECT_EQ(g.compare(m("b2^2"), m("b1*b3")), std::strong_ordering::greater);
    EXPECT_EQ(leading_monomial(P_("b1^3 + b2*b3"), g), m("b1^3"));
    EXPECT_EQ(leading_monomial(P_("b1 + b2"), l), m("b2"));
}

TEST(Groebner, MembershipAndRadical) {
    const Ideal sq(polys({"b1^2"}), order(2));
    EXPECT_FALSE(member(P_("b1"), sq));
    EXPECT_TRUE(radical_member(P_("b1"), sq));
    EXPECT_TRUE(member(P_("b1^3*b2 + b1^2"), sq));
    EXPECT_FALSE(radical_member(P_("b2"), sq));
    EXPECT_EQ(sq.normal_form(P_("b1^2 + b1 + b2")), P_("b1 + b2"));
    EXPECT_TRUE(radical_member(P_("b1 + b2"), Ideal(polys({"b1^3", "b2^2"}), order(2))));
}

TEST(Groebner, IdealEquality) {
    EXPECT_TRUE(ideal_equal(Ideal(polys({"b1", "b2"}), order(2)), Ideal(polys({"b1 + b2", "b1 - b2"}), order(2))));
    EXPECT_FALSE(ideal_equal(Ideal(polys({"b1"}), order(2)), Ideal(polys({"b1^2"}), order(2))));
    EXPECT_THROW(ideal_equal(Ideal(polys({"b1"}), order(2)), Ideal(polys({"b1"}), order(3))), IdealError);
}

TEST(Groebner, HilbertDimension) {
    EXPECT_EQ(hilbert_dimension(Ideal(polys({"b1"}), order(6))), 5);
    EXPECT_EQ(hilbert_dimension(Ideal(polys({"b1*b2"}), order(3))), 2);
    EXPECT_EQ(hilbert_dimension(Ideal(polys({"b1", "b2^2"}), order(3))), 1);
    EXPECT_EQ(hilbert_dimension(Ideal({sw1_j()}, order(6))), 5);
    EXPECT_THROW(hilbert_dimension(Ideal(polys({"b1 - 1", "b1"}), order(2))), UnitIdeal);
    try {
        hilbert_dimension(Ideal({Poly()}, order(4)));
        FAIL() << "expected ZeroIdeal";
    } catch (const ZeroIdeal& z) {
        EXPECT_EQ(z.dimension, 4);
    }
}

TEST(Groebner, InvalidGenerators) {
    EXPECT_THROW(Ideal(polys({"b3"}), order(2)), IdealError);
    EXPECT_THROW(Ideal(polys({"x1*b1"}), order(2)), IdealError);
}

class GroebnerProperties : public ::testing::TestWithParam<int> {};

TEST_P(GroebnerProperties, BuchbergerCriterionAndUniqueness) {
    RandomPolys rnd(300 + static_cast<std::uint64_t>(GetParam()));
    const int m = 3;
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rnd.poly(b_variables(m), 3, 3));
    const Ideal ideal(gens, order(m));
    const auto& basis = ideal.groebner_basis();
    EXPECT_TRUE(s_pairs_reduce_to_zero(basis, order(m)));
    for (const auto& g : gens) EXPECT_TRUE(member(g, ideal));
    for (const auto& g : basis) EXPECT_EQ(g.coefficient(leading_monomial(g, order(m))), Rational(1));

    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rnd.engine());
    shuffled.push_back(gens[0] * gens[1] + gens[2]);
    EXPECT_EQ(groebner(Ideal(shuffled, order(m))), basis);

    // members are radical members; products of generators are members
    const Poly f = gens[0] * rnd.poly(b_variables(m), 2, 2);
    EXPECT_TRUE(member(f, ideal));
    EXPECT_TRUE(radical_member(f, ideal));
    EXPECT_TRUE(radical_member(gens[1], ideal));
}

INSTANTIATE_TEST_SUITE_P(Random, GroebnerProperties, ::testing::Range(0, 8));

TEST(Groebner, SPolynomial) {
    const auto o = order(2);
    EXPECT_EQ(s_polynomial(P_("b1^2 + b2"), P_("b1*b2"), o), P_("b2^2"));
    EXPECT_EQ(reduce(P_("b1^2*b2"), polys({"b1*b2 - 1"}), o), P_("b1"));
}

TEST(Groebner, ExactQuotient) {
    const auto o = order(6);
    EXPECT_EQ(exact_quotient(P_("b4") * sw1_j(), sw1_j(), o), P_("b4"));
    EXPECT_EQ(exact_quotient(P_("b1^2 - b2^2"), P_("b1 + b2"), o), P_("b1 - b2"));
    EXPECT_FALSE(exact_quotient(P_("b1^2 + b2^2"), P_("b1 + b2"), o));
    EXPECT_FALSE(exact_quotient(sw1_j(), P_("b1"), o));
}

TEST(Groebner, JsonRoundTrip) {
    const Ideal i(polys({"b1*b2 - 1/2*b3", "b3^2"}), MonomialOrder::lex(b_variables(3)));
    const Ideal back = ideal_from_json(nlohmann::json::parse(to_json(i).dump()));
    EXPECT_EQ(back.generators(), i.generators());
    EXPECT_EQ(back.order(), i.order());
    EXPECT_EQ(back.groebner_basis(), i.groebner_basis());
}

TEST(LinearFactors, Examples) {
    EXPECT_TRUE(linear_factors(sw1_j()).empty());
    EXPECT_EQ(linear_factors(P_("b4") * sw1_j()), polys({"b4"}));
    EXPECT_EQ(linear_factors(P_("b1^2 - b2^2")), polys({"b1 + b2", "b1 - b2"}));
    EXPECT_EQ(linear_factors(P_("2*b1 - 4*b3") * P_("b2^2 + 1")), polys({"b1 - 2*b3"}));
    EXPECT_THROW(linear_factors(Poly()), IdealError);
}

// Independent check that J has no linear factor: a factor normalized on its
// smallest variable b_k reads b_k + sum_{i>k} c_i b_i, and it divides J iff J
// vanishes after b_k -> -sum c_i b_i. The coefficient equations in c must
// then have no common solution, i.e. generate the unit ideal.
TEST(LinearFactors, UndeterminedCoefficientOracle) {
    const Poly& j = sw1_j();
    for (int k = 1; k <= 6; ++k) {
        Poly repl;
        std::vector<VarId> cs;
        for (int i = k + 1; i <= 6; ++i) {
            repl -= Poly(C(i)) * Poly(B(i));
            cs.push_back(C(i));
        }
        const Poly sub = substitute(j, Bindings{{B(k), repl}});
        std::vector<Poly> eqs;
        for (const auto& [mono, coeff] : collect(sub, {Space::b})) eqs.push_back(coeff);
        if (cs.empty()) {
            EXPECT_FALSE(sub.is_zero());
            continue;
        }
        const Ideal ideal(eqs, MonomialOrder::grevlex(cs));
        EXPECT_EQ(ideal.groebner_basis(), polys({"1"})) << "k = " << k;
    }
}

TEST(HaantjesZeroIdeal, Systems) {
    auto family = [](const std::string& name) {
        const auto spec = catalog::get(name);
        return compatible_family(killing_space(3), spec);
    };
    EXPECT_TRUE(haantjes_zero_ideal(family("oscillator")).is_zero());
    const Ideal sw1 = haantjes_zero_ideal(family("sw1"));
    EXPECT_TRUE(radical_member(sw1_j(), sw1));
    EXPECT_FALSE(member(sw1_j(), sw1));
    for (const auto& g : sw1.generators()) EXPECT_TRUE(exact_quotient(g, sw1_j(), sw1.order()));
    for (const std::string name : {"oo", "iv"}) {
        const Ideal i = haantjes_zero_ideal(family(name));
        const Poly g = *catalog::get(name).radical_generator;
        EXPECT_TRUE(radical_member(g, i)) << name;
        for (const auto& f : i.generators()) EXPECT_TRUE(member(f, Ideal({g}, i.order()))) << name;
    }
}

}  // namespace
}  // namespace htk
