#include "htk/killing.hpp"

namespace htk::catalog {

namespace {

Poly P_(const char* text) { return Poly::parse(text); }

std::vector<PotentialTerm> terms(const std::vector<const char*>& gens) {
    std::vector<PotentialTerm> out;
    for (std::size_t r = 0; r < gens.size(); ++r) out.push_back({P_(gens[r]), A(static_cast<int>(r))});
    return out;
}

TensorField sw1_family() {
    return symmetric_matrix({
        {"b4*x2^2 + b5*x3^2 + b1", "-b4*x1*x2", "-b5*x1*x3"},
        {"-b4*x1*x2", "b4*x1^2 + b6*x3^2 + b2", "-b6*x2*x3"},
        {"-b5*x1*x3", "-b6*x2*x3", "b5*x1^2 + b6*x2^2 + b3"},
    });
}

}  // namespace

TensorField symmetric_matrix(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Poly>> m;
    for (const auto& r : rows) {
        std::vector<Poly> pr;
        for (const auto& s : r) pr.push_back(Poly::parse(s));
        m.push_back(std::move(pr));
    }
    auto t = TensorField::from_matrix(m, {Slot::down, Slot::down});
    if (t != transpose(t)) throw KillingError("symmetric_matrix: matrix is not symmetric");
    return t;
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> kNames{"sw1", "oscillator", "oo", "iv", "nonmaximal-3d"};
    return kNames;
}

PotentialSpec get(const std::string& name) {
    PotentialSpec s;
    s.name = name;
    s.dim = 3;
    if (name == "sw1") {
        s.description = "Smorodinski-Winternitz I: a0 (x1^2+x2^2+x3^2) + a1/x1^2 + a2/x2^2 + a3/x3^2";
        s.terms = terms({"x1^2 + x2^2 + x3^2", "x1^-2", "x2^-2", "x3^-2"});
        s.reference_family = sw1_family();
        s.radical_generator = P_("b2*b4*b5 - b3*b4*b5 - b1*b4*b6 + b3*b4*b6 + b1*b5*b6 - b2*b5*b6");
    } else if (name == "oscillator") {
        s.description = "isotropic harmonic oscillator O: a0 (x1^2+x2^2+x3^2) + a1 x1 + a2 x2 + a3 x3";
        s.terms = terms({"x1^2 + x2^2 + x3^2", "x1", "x2", "x3"});
        s.reference_family = symmetric_matrix({
            {"b1", "b4", "b5"},
            {"b4", "b2", "b6"},
            {"b5", "b6", "b3"},
        });
    } else if (name == "oo") {
        s.description = "Smorodinski-Winternitz II (OO): a0 (4x1^2+4x2^2+x3^2) + a1 x1 + a2 x2 + a3/x3^2";
        s.terms = terms({"4*x1^2 + 4*x2^2 + x3^2", "x1", "x2", "x3^-2"});
        s.reference_family = symmetric_matrix({
            {"b1", "b5", "-b4*x3"},
            {"b5", "b2", "-b6*x3"},
            {"-b4*x3", "-b6*x3", "2*b4*x1 + 2*b6*x2 + b3"},
        });
        s.radical_generator = P_("b1*b4*b6 - b2*b4*b6 - b4^2*b5 + b5*b6^2");
    } else if (name == "iv") {
        s.description = "Smorodinski-Winternitz II (IV): a0 (4x1^2+x2^2+x3^2) + a1 x1 + a2/x2^2 + a3/x3^2";
        s.terms = terms({"4*x1^2 + x2^2 + x3^2", "x1", "x2^-2", "x3^-2"});
        s.reference_family = symmetric_matrix({
            {"b1", "-b6*x2", "-b4*x3"},
            {"-b6*x2", "b5*x3^2 + 2*b6*x1 + b2", "-b5*x2*x3"},
            {"-b4*x3", "-b5*x2*x3", "b5*x2^2 + 2*b4*x1 + b3"},
        });
        s.radical_generator = P_("b1*b4*b5 - b2*b4*b5 + b4^2*b6 - b1*b5*b6 + b3*b5*b6 - b4*b6^2");
    } else if (name == "nonmaximal-3d") {
        s.description = "non-maximal restriction of SW I with b4 = b6 = 0: integrals F1, F2, F3, F5";
        s.terms = terms({"x1^2 + x2^2 + x3^2", "x1^-2", "x2^-2", "x3^-2"});
        s.reference_family = sw1_family();
        s.restriction = {{B(4), Poly()}, {B(6), Poly()}};
    } else {
        throw KillingError("unknown system '" + name + "'");
    }
    return s;
}

nlohmann::json to_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& name : names()) {
        auto s = get(name);
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& t : s.terms)
            gens.push_back({{"generator", t.generator.to_string()}, {"coefficient", t.coefficient.name()}});
        nlohmann::json entry{{"name", s.name}, {"description", s.description}, {"dim", s.dim}, {"terms", gens}};
        if (s.reference_family) entry["reference_family"] = htk::to_json(*s.reference_family);
        if (s.radical_generator) entry["radical_generator"] = s.radical_generator->to_string();
        if (!s.restriction.empty()) {
            nlohmann::json r = nlohmann::json::object();
            for (const auto& [v, p] : s.restriction) r[v.name()] = p.to_string();
            entry["restriction"] = r;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace htk::catalog
