#include <gtest/gtest.h>

#include "htk/killing.hpp"
#include "oracles.hpp"

namespace htk {
namespace {

using testing::P_;

TEST(Tensor, PartialDerivative) {
    auto k = catalog::symmetric_matrix({{"1", "2", "0"}, {"2", "3", "0"}, {"0", "0", "5"}});
    EXPECT_TRUE(partial_derivative(k).is_zero());

    auto w = TensorField::one_form({P_("x1"), Poly(), Poly()});
    auto dw = partial_derivative(w);
    EXPECT_EQ(dw.slots(), (std::vector<Slot>{Slot::down, Slot::down}));
    EXPECT_EQ(dw.at({0, 0}), Poly(1L));
    for (std::size_t off = 1; off < dw.size(); ++off) EXPECT_TRUE(dw.flat(off).is_zero());

    auto sw = catalog::get("sw1").reference_family.value();
    EXPECT_EQ(partial_derivative(sw).at({0, 0, 1}), P_("2*b4*x2"));
}

TEST(Tensor, RaiseLower) {
    auto k = catalog::get("sw1").reference_family.value();
    auto up = raise_lower(k, 0, Slot::up, Metric::euclidean(3));
    EXPECT_EQ(up.components(), k.components());
    auto lorentz = raise_lower(k, 0, Slot::up, Metric(3, {-1, 1, 1}));
    for (int j = 0; j < 3; ++j) {
        EXPECT_EQ(lorentz.at({0, j}), -k.at({0, j}));
        EXPECT_EQ(lorentz.at({1, j}), k.at({1, j}));
    }
    EXPECT_EQ(raise_lower(up, 0, Slot::down, Metric::euclidean(3)), k);
}

TEST(Tensor, Contract) {
    auto id = TensorField::identity_operator(3);
    auto tr = contract(id, 0, 1);
    EXPECT_EQ(tr.rank(), 0);
    EXPECT_EQ(tr.flat(0), Poly(3L));
    EXPECT_THROW(contract(TensorField(3, {Slot::down, Slot::down}), 0, 1), SlotKindMismatch);

    // (A B)^i_j = A^i_a B^a_j
    auto a = TensorField::from_matrix({{P_("x1"), P_("1")}, {P_("x2"), P_("0")}}, {Slot::up, Slot::down});
    auto b = TensorField::from_matrix({{P_("2"), P_("x2")}, {P_("1"), P_("x1")}}, {Slot::up, Slot::down});
    auto ab = contract(outer(a, b), 1, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(ab.at({i, j}), a.at({i, 0}) * b.at({0, j}) + a.at({i, 1}) * b.at({1, j}));
}

TEST(Tensor, ContractionOfDerivativeWithOperator) {
    const Poly f = P_("x1^3 + x1*x2*x3");
    auto h = hessian_operator(f, 3);
    auto dh = partial_derivative(h);  // (i, k, a) = f_{,ika}
    auto term = contract(outer(dh, h), 3, 2);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) {
                Poly direct;
                for (int a = 0; a < 3; ++a) direct += dh.at({i, k, a}) * h.at({a, j});
                EXPECT_EQ(term.at({i, k, j}), direct);
            }
}

TEST(Tensor, SymAntisym) {
    auto k = catalog::get("sw1").reference_family.value();
    EXPECT_EQ(sym_antisym(k, {0, 1}, SymMode::sym), k);
    EXPECT_TRUE(sym_antisym(k, {0, 1}, SymMode::antisym).is_zero());
    EXPECT_THROW(sym_antisym(TensorField::identity_operator(3), {0, 1}, SymMode::sym), SlotKindMismatch);
    for (const auto& e : killing_space(3).elements) EXPECT_TRUE(killing_residual(e).is_zero());
}

TEST(Tensor, HessianOperator) {
    auto h = hessian_operator(P_("x1^3"), 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(h.at({i, j}), i == 0 && j == 0 ? P_("6*x1") : Poly());
    EXPECT_EQ(hessian_operator(P_("x1^2 + x2^2 + x3^2"), 3), TensorField::identity_operator(3) * Poly(2L));
    auto c = hessian_operator(P_("x1^3 + x1*x2*x3"), 3);
    EXPECT_EQ(c.at({0, 1}), P_("x3"));
    EXPECT_EQ(c.at({1, 2}), P_("x1"));
    EXPECT_EQ(c.at({0, 0}), P_("6*x1"));
    EXPECT_THROW(hessian_operator(P_("x1^-2"), 3), TensorError);
}

TEST(Tensor, JsonRoundTrip) {
    auto k = catalog::get("iv").reference_family.value();
    auto j = to_json(k);
    EXPECT_EQ(tensor_from_json(j), k);
    EXPECT_EQ(tensor_from_json(nlohmann::json::parse(j.dump())), k);
}

TEST(Tensor, EvaluateAtPoint) {
    auto k = catalog::symmetric_matrix({{"x1^-2", "x2"}, {"x2", "1"}});
    std::vector<Rational> pt{Rational(1, 2), Rational(3)};
    auto v = evaluate(k, pt);
    EXPECT_EQ(v.at({0, 0}), Rational(4));
    EXPECT_EQ(v.at({0, 1}), Rational(3));
}

}  // namespace
}  // namespace htk
