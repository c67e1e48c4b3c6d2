#include "detail.hpp"
#include "htk/haantjes.hpp"

namespace htk::detail {

namespace {

Poly bp(int i) { return Poly(B(i)); }

}  // namespace

Check family_check(const PotentialSpec& spec, const KillingFamily& family, int criterion) {
    return run_check("family", criterion, "compatible Killing tensors form a linear family", [&](nlohmann::json& out) {
        out["parameters"] = family.parameter_count();
        out["matrix"] = matrix_json(family.components());
        bool killing = true;
        bool compatible = true;
        for (const auto& k : family.basis()) {
            killing = killing && killing_residual(k).is_zero();
            const auto op = OperatorField::from_covariant(k);
            for (const auto& u : spec.generators())
                compatible = compatible && conservation_check(op, u).is_conservation_law();
        }
        out["all_killing"] = killing;
        out["all_compatible"] = compatible;
        bool ok = killing && compatible;
        if (spec.reference_family && spec.restriction.empty()) {
            auto ref = parameter_coefficients(*spec.reference_family, family.params());
            bool same = same_span(ref, family.basis());
            out["matches_reference"] = same;
            ok = ok && same;
        }
        return verdict(ok);
    });
}

Check radical_check(const PotentialSpec& spec, const Ideal& ideal, int criterion) {
    return run_check(
        "radical-" + spec.name, criterion,
        "radical of the Haantjes-zero ideal is principal: I inside <g> and g in rad(I)", [&](nlohmann::json& out) {
            if (ideal.is_zero()) {
                out["zero_ideal"] = true;
                return verdict(!spec.radical_generator);
            }
            if (!spec.radical_generator) throw IdealError("no catalogued radical generator for " + spec.name);
            const Poly& g = *spec.radical_generator;
            const Ideal principal({g}, ideal.order());
            bool contained = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                         [&](const Poly& f) { return member(f, principal); });
            bool radical = radical_member(g, ideal);
            out["generator"] = g.to_string();
            out["ideal_inside_principal"] = contained;
            out["generator_in_radical"] = radical;
            return verdict(contained && radical);
        });
}

Check branch_check(int criterion) {
    return run_check("branches", criterion, "every listed solution branch annihilates J", [&](nlohmann::json& out) {
        const Poly j = *catalog::get("sw1").radical_generator;
        struct Branch {
            std::string label;
            Bindings values;
        };
        const Poly zero;
        const std::vector<Branch> branches{
            {"(ii) b6=0, b3=b2", {{B(6), zero}, {B(3), bp(2)}}},
            {"(ii) b6=b4=0", {{B(6), zero}, {B(4), zero}}},
            {"(ii) b6=b5=0", {{B(6), zero}, {B(5), zero}}},
            {"(iii) b4=b5=b6=0", {{B(4), zero}, {B(5), zero}, {B(6), zero}}},
            {"(iii) b2=b3, b6=0, b4=b5", {{B(3), bp(2)}, {B(6), zero}, {B(5), bp(4)}}},
            {"(iv) b4=b5=b6", {{B(5), bp(6)}, {B(4), bp(6)}}},
            {"(iv) b2=b3, b4=b5", {{B(3), bp(2)}, {B(5), bp(4)}}},
            {"(iv) b4=b5=0", {{B(4), zero}, {B(5), zero}}},
        };
        bool all = true;
        // (i): b1 = ((b2-b3) b4 b5 + (b3 b4 - b2 b5) b6) / ((b4-b5) b6), cleared.
        const Poly num = (bp(2) - bp(3)) * bp(4) * bp(5) + (bp(3) * bp(4) - bp(2) * bp(5)) * bp(6);
        const Poly den = (bp(4) - bp(5)) * bp(6);
        const Poly cleared = clear_substitution(j, B(1), num, den);
        out["(i) b1 = N/D"] = cleared.to_string();
        all = all && cleared.is_zero();
        for (const auto& b : branches) {
            Poly v = substitute(j, b.values);
            out[b.label] = v.to_string();
            all = all && v.is_zero();
        }
        out["branches"] = branches.size() + 1;
        return verdict(all);
    });
}

Check mechanics_check(const PotentialSpec& spec, const KillingFamily& family, std::uint64_t seed, int criterion) {
    return run_check(
        "mechanics-" + spec.name, criterion, "integrals F = K^{ij} p_i p_j + W Poisson-commute with H",
        [&](nlohmann::json& out) {
            const int n = spec.dim;
            const PhaseFunction h = hamiltonian(n, spec.potential());
            out["hamiltonian"] = h.to_string();
            std::vector<PhaseFunction> fs{h};
            nlohmann::json integrals = nlohmann::json::array();
            bool commute = true;
            for (const auto& k : family.basis()) {
                PhaseFunction f = build_integral(k, spec);
                bool zero = poisson(h, f).poly().is_zero();
                commute = commute && zero;
                integrals.push_back({{"F", f.to_string()}, {"commutes", zero}});
                fs.push_back(std::move(f));
            }
            out["integrals"] = integrals;
            SamplePoints rng(seed);
            const int trials = sample_count(10, 10);
            auto ind = functional_independence(fs, trials, rng);
            out["rank_with_hamiltonian"] = ind.rank;
            out["rank_stable"] = ind.stable();
            out["trials"] = trials;
            return verdict(commute);
        });
}

}  // namespace htk::detail
