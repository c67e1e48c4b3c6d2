#include "htk/report.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "htk/haantjes.hpp"
#include "detail.hpp"

namespace htk {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::evidence_only: return "evidence-only";
    }
    return "fail";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "evidence-only") return Verdict::evidence_only;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

bool Report::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == Verdict::fail; });
}

Verdict Report::criterion_verdict(int criterion) const {
    bool any = false;
    for (const auto& c : checks) {
        if (c.criterion != criterion) continue;
        any = true;
        if (c.verdict == Verdict::fail) return Verdict::fail;
    }
    return any ? Verdict::pass : Verdict::fail;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"criterion", c.criterion},
                          {"claim", c.claim},
                          {"verdict", to_string(c.verdict)},
                          {"payload", c.payload},
                          {"micros", c.micros}});
    return {{"version", r.version}, {"title", r.title}, {"seed", r.seed}, {"ok", r.ok()}, {"checks", checks}};
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.version = j.at("version").get<std::string>();
    r.title = j.at("title").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("criterion").get<int>(),
                            c.at("claim").get<std::string>(), verdict_from_string(c.at("verdict").get<std::string>()),
                            c.at("payload"), c.at("micros").get<std::int64_t>()});
    return r;
}

std::string to_text(const Report& r, bool verbose) {
    std::ostringstream os;
    os << r.title << " (htk " << r.version << ", seed " << r.seed << ")\n";
    for (const auto& c : r.checks) {
        std::string tag = c.verdict == Verdict::pass ? "PASS" : c.verdict == Verdict::fail ? "FAIL" : "EVIDENCE";
        os << "[" << tag << "] ";
        if (c.criterion > 0) os << "#" << c.criterion << " ";
        os << c.name << ": " << c.claim << " (" << c.micros / 1000 << " ms)\n";
        if (verbose || c.verdict == Verdict::fail) {
            std::istringstream lines(c.payload.dump(2));
            for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
        }
    }
    os << (r.ok() ? "all checks passed or evidence-only\n" : "some checks FAILED\n");
    return os.str();
}

int sample_count(int fallback, int minimum) {
    int n = fallback;
    if (const char* env = std::getenv("HAANTJES_TRIALS")) {
        try {
            n = std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("HAANTJES_TRIALS is not an integer: ") + env);
        }
    }
    return std::max(n, minimum);
}

Check run_check(std::string name, int criterion, std::string claim,
                const std::function<Verdict(nlohmann::json&)>& body) {
    Check c{std::move(name), criterion, std::move(claim), Verdict::fail, nlohmann::json::object(), 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.verdict = body(c.payload);
    } catch (const std::exception& e) {
        c.verdict = Verdict::fail;
        c.payload["error"] = e.what();
    }
    c.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

namespace detail {

Verdict verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

nlohmann::json nonzero_components(const std::string& name, const TensorField& t) {
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t off = 0; off < t.size(); ++off) {
        if (t.flat(off).is_zero()) continue;
        out[component_label(name, t.slots(), t.unravel(off))] = t.flat(off).to_string();
    }
    return out;
}

std::string component_label(const std::string& name, const std::vector<Slot>& slots, const Index& idx) {
    std::string up, down;
    for (std::size_t s = 0; s < slots.size(); ++s) (slots[s] == Slot::up ? up : down) += std::to_string(idx[s] + 1);
    std::string label = name;
    if (!up.empty()) label += "^" + up;
    if (!down.empty()) label += "_" + down;
    return label;
}

nlohmann::json poly_list(const std::vector<Poly>& ps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

nlohmann::json matrix_json(const TensorField& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < t.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < t.dim(); ++j) row.push_back(t.at({i, j}).to_string());
        rows.push_back(row);
    }
    return rows;
}

Poly clear_substitution(const Poly& f, VarId v, const Poly& num, const Poly& den) {
    const int deg = f.degree(v);
    if (f.min_degree(v) < 0) throw IdealError("clear_substitution: negative exponent");
    Poly out;
    std::vector<Poly> coeff(static_cast<std::size_t>(deg) + 1);
    for (const auto& [m, c] : f.terms()) coeff[static_cast<std::size_t>(m.degree(v))] += Poly(m.without(v), c);
    for (int k = 0; k <= deg; ++k)
        out += coeff[static_cast<std::size_t>(k)] * pow(num, static_cast<unsigned>(k)) *
               pow(den, static_cast<unsigned>(deg - k));
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------- hessian

Report hessian_report(const Poly& f, int dim) {
    Report r;
    r.title = "Hessian operator of " + f.to_string() + " in dimension " + std::to_string(dim);
    const auto a = OperatorField(hessian_operator(f, dim));
    r.checks.push_back(run_check("operator", 0, "Hessian operator A^i_j = d_i d_j f", [&](nlohmann::json& out) {
        out["matrix"] = detail::matrix_json(a.tensor());
        return Verdict::pass;
    }));
    r.checks.push_back(run_check("conservation-laws", 0,
                                 "u = x1^2+...+xn^2 and u = x_j generate conservation laws d(A* du) = 0",
                                 [&](nlohmann::json& out) {
                                     std::vector<Poly> us;
                                     Poly r2;
                                     for (int i = 1; i <= dim; ++i) r2 += Poly(X(i), 2);
                                     us.push_back(r2);
                                     for (int i = 1; i <= dim; ++i) us.push_back(Poly(X(i)));
                                     bool all = true;
                                     for (const auto& u : us) {
                                         auto res = conservation_check(a, u);
                                         all = all && res.is_conservation_law();
                                         out[u.to_string()] = detail::nonzero_components("R", res.residual);
                                     }
                                     out["count"] = us.size();
                                     return detail::verdict(all);
                                 }));
    const TensorField n = nijenhuis(a);
    r.checks.push_back(run_check("nijenhuis", 0, "Nijenhuis torsion of A", [&](nlohmann::json& out) {
        out["nonzero"] = detail::nonzero_components("N", n);
        return Verdict::pass;
    }));
    r.checks.push_back(run_check("haantjes", 0, "Haantjes torsion of A, zero/nonzero verdict with witness",
                                 [&](nlohmann::json& out) {
                                     const TensorField h = haantjes_from_nijenhuis(a, n);
                                     auto w = first_nonzero(h);
                                     out["zero"] = !w.has_value();
                                     if (w)
                                         out["witness"] = {{detail::component_label("H", h.slots(), w->index),
                                                            w->value.to_string()}};
                                     out["nonzero"] = detail::nonzero_components("H", h);
                                     return Verdict::pass;
                                 }));
    return r;
}

// ---------------------------------------------------------------- systems

const std::vector<std::pair<std::string, SystemAction>>& system_action_names() {
    static const std::vector<std::pair<std::string, SystemAction>> kNames{
        {"family", SystemAction::family},
        {"ideal", SystemAction::ideal},
        {"radical-check", SystemAction::radical_check},
        {"dimension", SystemAction::dimension},
        {"linear-subspace", SystemAction::linear_subspace},
        {"branches", SystemAction::branches},
        {"mechanics", SystemAction::mechanics},
    };
    return kNames;
}

Report system_report(const std::string& name, const std::vector<SystemAction>& actions, std::uint64_t seed) {
    const PotentialSpec spec = catalog::get(name);
    Report r;
    r.title = "system " + name + ": " + spec.description;
    r.seed = seed;

    KillingFamily family = compatible_family(killing_space(spec.dim), spec);
    if (!spec.restriction.empty()) family = restrict_family(family, spec.restriction);
    std::optional<Ideal> ideal;
    auto get_ideal = [&]() -> const Ideal& {
        if (!ideal) ideal = haantjes_zero_ideal(family);
        return *ideal;
    };

    for (auto action : actions) {
        switch (action) {
            case SystemAction::family:
                r.checks.push_back(detail::family_check(spec, family, 0));
                break;
            case SystemAction::ideal:
                r.checks.push_back(run_check("ideal", 0, "Haantjes-zero ideal of the compatible family",
                                             [&](nlohmann::json& out) {
                                                 const Ideal& I = get_ideal();
                                                 out["ideal"] = to_json(I);
                                                 out["groebner_basis"] = detail::poly_list(I.groebner_basis());
                                                 out["zero_ideal"] = I.is_zero();
                                                 if (I.is_zero())
                                                     out["conclusion"] = "all compatible Killing tensors Haantjes-zero";
                                                 return Verdict::pass;
                                             }));
                break;
            case SystemAction::radical_check:
                r.checks.push_back(detail::radical_check(spec, get_ideal(), 0));
                break;
            case SystemAction::dimension:
                r.checks.push_back(run_check("dimension", 0, "Hilbert dimension of the Haantjes-zero ideal",
                                             [&](nlohmann::json& out) {
                                                 try {
                                                     out["dimension"] = hilbert_dimension(get_ideal());
                                                 } catch (const ZeroIdeal& z) {
                                                     out["dimension"] = z.dimension;
                                                     out["zero_ideal"] = true;
                                                 }
                                                 return Verdict::pass;
                                             }));
                break;
            case SystemAction::linear_subspace:
                r.checks.push_back(run_check(
                    "linear-subspace", 0, "linear factors of the radical generator (hyperplanes inside the variety)",
                    [&](nlohmann::json& out) {
                        if (!spec.radical_generator) {
                            out["note"] = "no radical generator: the Haantjes-zero set is the whole family";
                            return Verdict::pass;
                        }
                        out["generator"] = spec.radical_generator->to_string();
                        out["linear_factors"] = detail::poly_list(linear_factors(*spec.radical_generator));
                        return Verdict::pass;
                    }));
                break;
            case SystemAction::branches:
                if (name != "sw1" && name != "nonmaximal-3d") {
                    r.checks.push_back(run_check("branches", 0, "branch substitutions", [](nlohmann::json& out) {
                        out["note"] = "branch list is only catalogued for sw1";
                        return Verdict::pass;
                    }));
                } else {
                    r.checks.push_back(detail::branch_check(0));
                }
                break;
            case SystemAction::mechanics:
                r.checks.push_back(detail::mechanics_check(spec, family, seed, 0));
                break;
        }
    }
    return r;
}

}  // namespace htk
