// htk: command-line front end for the torsion, Killing tensor and ideal
// pipelines.

#include <CLI11.hpp>
#include <iostream>

#include "htk/report.hpp"

namespace {

int emit(const htk::Report& r, bool json, bool verbose) {
    if (json)
        std::cout << htk::to_json(r).dump(2) << "\n";
    else
        std::cout << htk::to_text(r, verbose);
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Haantjes torsion toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    bool verbose = false;
    std::uint64_t seed = 20240601;
    app.add_flag("--json", json, "machine-readable report");
    app.add_flag("-v,--verbose", verbose, "print payloads of passing checks too");
    app.add_option("--seed", seed, "seed for random sample points");

    auto* hessian = app.add_subcommand("hessian", "Haantjes torsion of the Hessian operator of a polynomial");
    std::string poly_text;
    int dim = 3;
    hessian->add_option("--poly", poly_text, "polynomial in x1..xn")->required();
    hessian->add_option("--dim", dim, "dimension n")->check(CLI::Range(1, 6));

    auto* system = app.add_subcommand("system", "pipelines for a catalogued superintegrable potential");
    std::string name;
    std::vector<std::string> actions;
    std::string choices;
    for (const auto& [a, _] : htk::system_action_names()) choices += (choices.empty() ? "" : ", ") + a;
    system->add_option("--system", name, "one of: sw1, oscillator, oo, iv, nonmaximal-3d")->required();
    system->add_option("actions", actions, "subset of: " + choices + " (default: all)");

    auto* catalog = app.add_subcommand("catalog", "list catalogued systems");
    auto* reproduce = app.add_subcommand("reproduce", "run the full reproduction suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*hessian) return emit(htk::hessian_report(htk::Poly::parse(poly_text), dim), json, verbose);
        if (*system) {
            std::vector<htk::SystemAction> selected;
            for (const auto& a : actions) {
                const auto& names = htk::system_action_names();
                auto it = std::find_if(names.begin(), names.end(), [&](const auto& p) { return p.first == a; });
                if (it == names.end()) {
                    std::cerr << "unknown action '" << a << "'; expected one of: " << choices << "\n";
                    return 2;
                }
                selected.push_back(it->second);
            }
            if (selected.empty())
                for (const auto& [_, act] : htk::system_action_names()) selected.push_back(act);
            return emit(htk::system_report(name, selected, seed), json, verbose);
        }
        if (*catalog) {
            std::cout << htk::catalog::to_json().dump(2) << "\n";
            return 0;
        }
        if (*reproduce) return emit(htk::reproduce_checks(seed), json, verbose);
    } catch (const htk::KillingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const htk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
