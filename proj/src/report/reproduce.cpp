#include "detail.hpp"
#include "htk/haantjes.hpp"
#include "htk/random.hpp"

namespace htk {

namespace {

using detail::verdict;
using nlohmann::json;

Poly parse(const char* s) { return Poly::parse(s); }

const MonomialOrder& b_order() {
    static const MonomialOrder kOrder = MonomialOrder::grevlex(b_variables(6));
    return kOrder;
}

KillingFamily family_of(const PotentialSpec& spec) {
    auto family = compatible_family(killing_space(spec.dim), spec);
    if (!spec.restriction.empty()) family = restrict_family(family, spec.restriction);
    return family;
}

Bindings b_values(const std::vector<long>& vs) {
    Bindings out;
    for (std::size_t i = 0; i < vs.size(); ++i) out[B(static_cast<int>(i) + 1)] = Poly(vs[i]);
    return out;
}

// ---------------------------------------------------------------- 1

void hessian_checks(Report& r) {
    r.checks.push_back(run_check("hessian-cube", 1, "the Hessian operator of x1^3 in dimension 3 is Haantjes-zero",
                                 [](json& out) {
                                     auto h = haantjes(OperatorField(hessian_operator(parse("x1^3"), 3)));
                                     out["nonzero"] = detail::nonzero_components("H", h);
                                     return verdict(h.is_zero());
                                 }));
    r.checks.push_back(run_check(
        "hessian-cubic-conservation", 1, "the Hessian operator of x1^3 + x1 x2 x3 admits 4 conservation laws",
        [](json& out) {
            const OperatorField a(hessian_operator(parse("x1^3 + x1*x2*x3"), 3));
            bool all = true;
            for (const char* u : {"x1^2 + x2^2 + x3^2", "x1", "x2", "x3"}) {
                bool ok = conservation_check(a, parse(u)).is_conservation_law();
                out[u] = ok;
                all = all && ok;
            }
            return verdict(all);
        }));
    r.checks.push_back(run_check(
        "hessian-cubic-components", 1,
        "Haantjes tensor of Hess(x1^3 + x1 x2 x3) has exactly H^b_32 = -H^b_23 = 2 x1 (x1^2 - x2^2), b = 1, 2, 3",
        [](json& out) {
            auto h = haantjes(OperatorField(hessian_operator(parse("x1^3 + x1*x2*x3"), 3)));
            const Poly w = parse("2*x1^3 - 2*x1*x2^2");
            json expected = json::object();
            for (int b = 1; b <= 3; ++b) {
                expected["H^" + std::to_string(b) + "_32"] = w.to_string();
                expected["H^" + std::to_string(b) + "_23"] = (-w).to_string();
            }
            json computed = detail::nonzero_components("H", h);
            out["expected"] = expected;
            out["computed"] = computed;
            return verdict(expected == computed);
        }));
}

// ---------------------------------------------------------------- 2, 3

void killing_checks(Report& r) {
    r.checks.push_back(run_check(
        "killing-space", 2, "Killing tensors of flat space: 6-dimensional for n = 2, 20-dimensional for n = 3",
        [](json& out) {
            bool ok = true;
            for (int n : {2, 3}) {
                auto basis = killing_space(n);
                // Cross-check against symmetric products of Killing vectors.
                auto vs = flat_killing_vectors(n);
                std::vector<TensorField> products;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i; j < vs.size(); ++j) products.push_back(symmetric_product(vs[i], vs[j]));
                bool spans = same_span(basis.elements, products);
                out["n=" + std::to_string(n)] = {{"dimension", basis.elements.size()},
                                                 {"spanned_by_symmetric_products", spans}};
                ok = ok && spans && basis.elements.size() == (n == 2 ? 6U : 20U);
            }
            return verdict(ok);
        }));

    const auto spec = catalog::get("sw1");
    const auto family = family_of(spec);
    r.checks.push_back(detail::family_check(spec, family, 3));
    r.checks.push_back(run_check("sw1-family-dimension", 3, "SW I compatible family has 6 parameters",
                                 [&](json& out) {
                                     out["parameters"] = family.parameter_count();
                                     return verdict(family.parameter_count() == 6);
                                 }));
}

// ---------------------------------------------------------------- 4

void sw1_ideal_checks(Report& r, std::vector<std::vector<Poly>>& bases) {
    const auto spec = catalog::get("sw1");
    const Poly j = *spec.radical_generator;
    const Ideal computed = haantjes_zero_ideal(family_of(spec));
    bases.push_back(computed.groebner_basis());
    const Poly b1 = Poly(B(1)), b2 = Poly(B(2)), b3 = Poly(B(3)), b4 = Poly(B(4)), b5 = Poly(B(5)), b6 = Poly(B(6));
    const Ideal stated({b4 * j, (b5 + b6) * j, (b3 - b2) * j, (b1 - b2) * j, b6 * j}, b_order());

    r.checks.push_back(run_check("sw1-ideal-equal", 4,
                                 "Haantjes-zero ideal equals <b4 J, (b5+b6) J, (b3-b2) J, (b1-b2) J, b6 J>",
                                 [&](json& out) {
                                     out["computed"] = to_json(computed);
                                     out["groebner_basis"] = detail::poly_list(computed.groebner_basis());
                                     return verdict(ideal_equal(computed, stated));
                                 }));
    r.checks.push_back(run_check("sw1-divisible", 4, "every generator of the ideal is divisible by J", [&](json& out) {
        json quotients = json::array();
        bool all = true;
        for (const auto& g : computed.generators()) {
            auto q = exact_quotient(g, j, b_order());
            all = all && q.has_value();
            quotients.push_back(q ? q->to_string() : "not divisible");
        }
        out["quotients"] = quotients;
        return verdict(all);
    }));
    r.checks.push_back(run_check("sw1-radical", 4, "J lies in the radical of I but not in I", [&](json& out) {
        bool rad = radical_member(j, computed);
        bool mem = member(j, computed);
        out["radical_member"] = rad;
        out["member"] = mem;
        out["normal_form"] = computed.normal_form(j).to_string();
        return verdict(rad && !mem);
    }));
    r.checks.push_back(run_check("sw1-dimension", 4, "<J> has Hilbert dimension 5", [&](json& out) {
        int d = hilbert_dimension(Ideal({j}, b_order()));
        out["dimension"] = d;
        out["dimension_of_I"] = hilbert_dimension(computed);
        return verdict(d == 5);
    }));
    r.checks.push_back(run_check(
        "sw1-prime", 4, "<J> is prime: J is a cubic without linear factor, hence irreducible over Q", [&](json& out) {
            auto lf = linear_factors(j);
            out["total_degree"] = j.total_degree();
            out["linear_factors"] = detail::poly_list(lf);
            out["note"] = "irreducibility over Q only; absolute primality not certified";
            return lf.empty() && j.total_degree() <= 3 ? Verdict::evidence_only : Verdict::fail;
        }));
}

// ---------------------------------------------------------------- 5

void example_checks(Report& r) {
    const auto family = family_of(catalog::get("sw1"));
    const Bindings b = b_values({0, 0, 1, 2, 2, 4});
    const TensorField k = specialize(family, b);
    const TensorField stated = catalog::symmetric_matrix({
        {"x2^2 + x3^2", "-x1*x2", "-x1*x3"},
        {"-x1*x2", "x1^2 + 2*x3^2", "-2*x2*x3"},
        {"-x1*x3", "-2*x2*x3", "x1^2 + 2*x2^2 + 1"},
    });

    r.checks.push_back(run_check("example-matrix", 5,
                                 "b = (0,0,1,2,2,4) specializes the SW I family to the stated operator field",
                                 [&](json& out) {
                                     out["specialized"] = detail::matrix_json(k);
                                     out["stated"] = detail::matrix_json(stated);
                                     return verdict(k == stated);
                                 }));
    auto off_diagonal_nonzero = [](const TensorField& h) {
        for (int i = 0; i < 3; ++i)
            for (int jj = 0; jj < 3; ++jj)
                for (int kk = 0; kk < 3; ++kk)
                    if (jj != kk && h.at({i, jj, kk}).is_zero()) return false;
        return true;
    };
    r.checks.push_back(run_check("example-haantjes", 5, "its Haantjes tensor has H^i_jk != 0 for every j != k",
                                 [&](json& out) {
                                     auto h = haantjes(OperatorField::from_covariant(k));
                                     bool ok = off_diagonal_nonzero(h);
                                     out["nonzero_count"] = detail::nonzero_components("H", h).size();
                                     out["stated_matrix_also"] =
                                         off_diagonal_nonzero(haantjes(OperatorField::from_covariant(stated)));
                                     return verdict(ok);
                                 }));
    r.checks.push_back(run_check("example-6b", 5, "it is non-degenerate and violates K_{m[k,n]l} = -1/3 K^{pq} K_{p[l,m]} K_{q[k,n]}", [&](json& out) {
        auto c = condition_6b(k);
        auto cp = condition_6b(stated);
        out["holds"] = c.holds;
        out["holds_unnormalized"] = c.holds_unnormalized;
        if (c.witness)
            out["witness"] = {{detail::component_label("R", c.residual.slots(), *c.witness),
                               c.residual[*c.witness].to_string()}};
        out["stated_matrix"] = {{"holds", cp.holds}, {"holds_unnormalized", cp.holds_unnormalized}};
        return verdict(!c.holds && !c.holds_unnormalized);
    }));
    r.checks.push_back(run_check("example-J", 5, "J does not vanish at b = (0,0,1,2,2,4)", [&](json& out) {
        Poly v = substitute(*catalog::get("sw1").radical_generator, b);
        out["J(b)"] = v.to_string();
        return verdict(!v.is_zero());
    }));
}

// ---------------------------------------------------------------- 7

void linear_factor_checks(Report& r) {
    const Poly j = *catalog::get("sw1").radical_generator;
    r.checks.push_back(run_check("no-linear-subspace", 7,
                                 "J has no linear factor, so {J = 0} contains no 5-dimensional linear subspace",
                                 [&](json& out) {
                                     auto lf = linear_factors(j);
                                     auto control = linear_factors(Poly(B(4)) * j);
                                     out["linear_factors"] = detail::poly_list(lf);
                                     out["control_b4_J"] = detail::poly_list(control);
                                     return verdict(lf.empty() && control == std::vector<Poly>{Poly(B(4))});
                                 }));
}

// ---------------------------------------------------------------- 8

void oscillator_checks(Report& r, std::uint64_t seed) {
    const auto spec = catalog::get("oscillator");
    const auto family = family_of(spec);
    r.checks.push_back(run_check("oscillator-family", 8, "compatible family is all constant symmetric tensors",
                                 [&](json& out) {
                                     std::vector<TensorField> constants;
                                     for (int i = 0; i < 3; ++i)
                                         for (int j = i; j < 3; ++j) {
                                             TensorField e(3, {Slot::down, Slot::down});
                                             e.at({i, j}) = Poly(1L);
                                             e.at({j, i}) = Poly(1L);
                                             constants.push_back(e);
                                         }
                                     bool same = same_span(family.basis(), constants);
                                     out["parameters"] = family.parameter_count();
                                     out["matrix"] = detail::matrix_json(family.components());
                                     return verdict(family.parameter_count() == 6 && same);
                                 }));
    r.checks.push_back(run_check("oscillator-ideal", 8, "Haantjes-zero ideal is the zero ideal", [&](json& out) {
        auto I = haantjes_zero_ideal(family);
        out["ideal"] = to_json(I);
        return verdict(I.is_zero());
    }));
    r.checks.push_back(run_check("oscillator-structural", 8, "structural tensor vanishes at random points",
                                 [&](json& out) {
                                     SamplePoints rng(seed + 8);
                                     const int count = sample_count(5, 5);
                                     bool all = true;
                                     json points = json::array();
                                     for (int t = 0; t < count; ++t) {
                                         auto x = rng.point(3);
                                         auto p = structural_tensor_at(family, x);
                                         all = all && p.is_zero();
                                         json pt = json::array();
                                         for (const auto& q : x) pt.push_back(q.get_str());
                                         points.push_back(pt);
                                     }
                                     out["points"] = points;
                                     return verdict(all);
                                 }));
}

// ---------------------------------------------------------------- 9

void sw2_checks(Report& r, std::vector<std::vector<Poly>>& bases) {
    for (const char* name : {"oo", "iv"}) {
        const auto spec = catalog::get(name);
        const Ideal I = haantjes_zero_ideal(family_of(spec));
        bases.push_back(I.groebner_basis());
        const Poly g = *spec.radical_generator;
        r.checks.push_back(detail::radical_check(spec, I, 9));
        r.checks.push_back(run_check(std::string(name) + "-dimension", 9,
                                     "radical generator has Hilbert dimension 5 and no linear factor",
                                     [&](json& out) {
                                         int d = hilbert_dimension(Ideal({g}, b_order()));
                                         int dI = hilbert_dimension(I);
                                         auto lf = linear_factors(g);
                                         out["dimension"] = d;
                                         out["dimension_of_I"] = dI;
                                         out["linear_factors"] = detail::poly_list(lf);
                                         return verdict(d == 5 && dI == 5 && lf.empty());
                                     }));
        r.checks.push_back(run_check(std::string(name) + "-prime", 9,
                                     "radical generator is an irreducible cubic (primality evidence)",
                                     [&](json& out) {
                                         auto lf = linear_factors(g);
                                         out["total_degree"] = g.total_degree();
                                         return lf.empty() && g.total_degree() <= 3 ? Verdict::evidence_only
                                                                                    : Verdict::fail;
                                     }));
    }
}

// ---------------------------------------------------------------- 10

void nonmaximal_checks(Report& r, std::uint64_t seed) {
    const auto spec = catalog::get("nonmaximal-3d");
    const auto family = family_of(spec);
    const PhaseFunction h = hamiltonian(3, spec.potential());
    std::vector<PhaseFunction> integrals;

    r.checks.push_back(run_check(
        "nonmaximal-integrals", 10, "the integrals built from dx1^2, dx2^2, dx3^2, (x3 dx1 - x1 dx3)^2 are F1, F2, F3, F5",
        [&](json& out) {
            const Poly x1 = Poly(X(1)), x3 = Poly(X(3)), p1 = Poly(P(1)), p3 = Poly(P(3));
            const std::vector<Poly> expected{
                parse("p1^2 + a1*x1^-2 + a0*x1^2"),
                parse("p2^2 + a2*x2^-2 + a0*x2^2"),
                parse("p3^2 + a3*x3^-2 + a0*x3^2"),
                pow(x3 * p1 - x1 * p3, 2) + parse("x3^2*a1*x1^-2 + x1^2*a3*x3^-2"),
            };
            bool all = family.parameter_count() == 4;
            json list = json::array();
            for (std::size_t i = 0; i < family.basis().size(); ++i) {
                integrals.push_back(build_integral(family.basis()[i], spec));
                bool same = i < expected.size() && integrals.back().poly() == expected[i];
                all = all && same;
                list.push_back({{"F", integrals.back().to_string()}, {"matches", same}});
            }
            out["parameters"] = json::array();
            for (auto v : family.params()) out["parameters"].push_back(v.name());
            out["integrals"] = list;
            return verdict(all);
        }));
    r.checks.push_back(run_check("nonmaximal-commute", 10, "{H, F} = 0 for each integral", [&](json& out) {
        bool all = !integrals.empty();
        for (const auto& f : integrals) {
            Poly br = poisson(h, f).poly();
            all = all && br.is_zero();
            out[f.to_string()] = br.to_string();
        }
        return verdict(all);
    }));
    r.checks.push_back(run_check("nonmaximal-independence", 10,
                                 "{H, F1, F2, F3, F5} has Jacobian rank 5 at random points", [&](json& out) {
                                     SamplePoints rng(seed + 10);
                                     const int trials = sample_count(10, 10);
                                     std::vector<PhaseFunction> fs{h};
                                     fs.insert(fs.end(), integrals.begin(), integrals.end());
                                     auto with_h = functional_independence(fs, trials, rng);
                                     auto without_h = functional_independence(integrals, trials, rng);
                                     Poly sum = integrals.at(0).poly() + integrals.at(1).poly() + integrals.at(2).poly();
                                     out["trials"] = trials;
                                     out["rank"] = with_h.rank;
                                     out["stable"] = with_h.stable();
                                     out["rank_without_H"] = without_h.rank;
                                     out["H_minus_F1_F2_F3"] = (h.poly() - sum).to_string();
                                     return verdict(with_h.rank == 5 && with_h.stable());
                                 }));
    r.checks.push_back(run_check("nonmaximal-haantjes", 10,
                                 "K = b1 dx1^2 + b2 dx2^2 + b3 dx3^2 + b5 (x3 dx1 - x1 dx3)^2 is Haantjes-zero",
                                 [&](json& out) {
                                     auto res = is_haantjes_zero(OperatorField::from_covariant(family.components()));
                                     out["matrix"] = detail::matrix_json(family.components());
                                     if (res.witness) out["witness"] = res.witness->value.to_string();
                                     return verdict(res.zero);
                                 }));
}

// ---------------------------------------------------------------- 11

void abundant_checks(Report& r, std::uint64_t seed) {
    r.checks.push_back(run_check(
        "abundant-sw1", 11, "Haantjes tensor from the structural tensor matches the direct torsion (SW I)",
        [&](json& out) {
            const auto family = family_of(catalog::get("sw1"));
            SamplePoints rng(seed + 11);
            const int points = sample_count(5, 5);
            int compared = 0, nonzero = 0;
            bool all = true;
            for (int t = 0; t < 3; ++t) {
                Bindings b;
                for (auto v : family.params()) b[v] = Poly(rng.value());
                const TensorField k = specialize(family, b);
                const TensorField h = haantjes(OperatorField::from_covariant(k));
                for (int s = 0; s < points;) {
                    auto x = rng.point(3);
                    StructuralTensor p;
                    try {
                        p = structural_tensor_at(family, x);
                    } catch (const NonUniqueSolution&) {
                        continue;
                    }
                    auto direct = evaluate(h, x);
                    all = all && abundant_haantjes(p, k, x) == direct;
                    nonzero += direct.is_zero() ? 0 : 1;
                    ++compared;
                    ++s;
                }
            }
            out["comparisons"] = compared;
            out["nonzero_direct_values"] = nonzero;
            return verdict(all && compared >= 15);
        }));
    r.checks.push_back(run_check(
        "abundant-oscillator", 11, "structural-tensor Haantjes formula gives zero for the oscillator family",
        [&](json& out) {
            const auto family = family_of(catalog::get("oscillator"));
            SamplePoints rng(seed + 111);
            bool all = true;
            const int points = sample_count(5, 5);
            for (int s = 0; s < points; ++s) {
                Bindings b;
                for (auto v : family.params()) b[v] = Poly(rng.value());
                auto x = rng.point(3);
                const TensorField k = specialize(family, b);
                auto via_p = abundant_haantjes(structural_tensor_at(family, x), k, x);
                all = all && via_p.is_zero() && evaluate(haantjes(OperatorField::from_covariant(k)), x) == via_p;
            }
            out["points"] = points;
            return verdict(all);
        }));
}

// ---------------------------------------------------------------- 12

void property_checks(Report& r, std::uint64_t seed, const std::vector<std::vector<Poly>>& bases) {
    r.checks.push_back(run_check("torsion-antisymmetry", 12, "N^i_jk = -N^i_kj and H^i_jk = -H^i_kj", [&](json& out) {
        RandomPolys gen(seed + 121);
        const int cases = 20;
        bool all = true;
        for (int t = 0; t < cases; ++t) {
            const int n = 2 + t % 2;
            const OperatorField a(gen.operator_field(n, 2, 2));
            const auto nt = nijenhuis(a);
            const auto ht = haantjes_from_nijenhuis(a, nt);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        all = all && nt.at({i, j, k}) == -nt.at({i, k, j}) && ht.at({i, j, k}) == -ht.at({i, k, j});
        }
        out["cases"] = cases;
        return verdict(all);
    }));
    r.checks.push_back(run_check("torsion-scaling", 12, "N(cA) = c^2 N(A) and H(cA) = c^4 H(A)", [&](json& out) {
        RandomPolys gen(seed + 122);
        const int cases = 10;
        bool all = true;
        for (int t = 0; t < cases; ++t) {
            const TensorField a = gen.operator_field(3, 2, 2);
            const Rational c = gen.coefficient();
            const OperatorField base(a), scaled(a * Poly(c));
            const auto n0 = nijenhuis(base);
            const auto n1 = nijenhuis(scaled);
            all = all && n1 == n0 * Poly(Rational(c * c));
            all = all && haantjes_from_nijenhuis(scaled, n1) ==
                             haantjes_from_nijenhuis(base, n0) * Poly(Rational(c * c * c * c));
        }
        out["cases"] = cases;
        return verdict(all);
    }));
    r.checks.push_back(run_check("haantjes-2d", 12, "every operator field in dimension 2 is Haantjes-zero",
                                 [&](json& out) {
                                     RandomPolys gen(seed + 123);
                                     const int cases = sample_count(50, 50);
                                     bool all = true;
                                     int nonzero_n = 0;
                                     for (int t = 0; t < cases; ++t) {
                                         const OperatorField a(gen.operator_field(2, 3, 3));
                                         const auto nt = nijenhuis(a);
                                         nonzero_n += nt.is_zero() ? 0 : 1;
                                         all = all && haantjes_from_nijenhuis(a, nt).is_zero();
                                     }
                                     out["cases"] = cases;
                                     out["cases_with_nonzero_nijenhuis"] = nonzero_n;
                                     return verdict(all);
                                 }));
    r.checks.push_back(run_check("poisson-jacobi", 12, "{f,{g,h}} + {g,{h,f}} + {h,{f,g}} = 0", [&](json& out) {
        RandomPolys gen(seed + 124);
        const int cases = sample_count(50, 50);
        const int n = 2;
        std::vector<VarId> vars = position_variables(n);
        for (auto v : momentum_variables(n)) vars.push_back(v);
        bool all = true;
        for (int t = 0; t < cases; ++t) {
            const PhaseFunction f(n, gen.poly(vars, 3, 3)), g(n, gen.poly(vars, 3, 3)), h(n, gen.poly(vars, 3, 3));
            Poly s = poisson(f, poisson(g, h)).poly() + poisson(g, poisson(h, f)).poly() +
                     poisson(h, poisson(f, g)).poly();
            all = all && s.is_zero();
        }
        out["cases"] = cases;
        return verdict(all);
    }));
    r.checks.push_back(run_check("buchberger", 12, "every S-polynomial of each computed basis reduces to zero",
                                 [&](json& out) {
                                     bool all = true;
                                     for (const auto& b : bases) all = all && s_pairs_reduce_to_zero(b, b_order());
                                     out["bases"] = bases.size();
                                     return verdict(all && !bases.empty());
                                 }));
}

}  // namespace

Report reproduce_checks(std::uint64_t seed) {
    Report r;
    r.title = "reproduction suite";
    r.seed = seed;
    std::vector<std::vector<Poly>> bases;
    hessian_checks(r);
    killing_checks(r);
    sw1_ideal_checks(r, bases);
    example_checks(r);
    r.checks.push_back(detail::branch_check(6));
    linear_factor_checks(r);
    oscillator_checks(r, seed);
    sw2_checks(r, bases);
    nonmaximal_checks(r, seed);
    abundant_checks(r, seed);
    bases.push_back(Ideal({*catalog::get("sw1").radical_generator}, b_order()).groebner_basis());
    property_checks(r, seed, bases);
    return r;
}

}  // namespace htk
