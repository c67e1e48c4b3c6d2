#pragma once

// Named checks with verdicts and JSON payloads. The reproduction suite, the
// per-system pipelines and the Hessian example all produce a Report.

#include <functional>

#include "htk/ideals.hpp"
#include "htk/mechanics.hpp"

namespace htk {

inline constexpr const char* kVersion = "0.1.0";

enum class Verdict : std::uint8_t { pass, fail, evidence_only };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Check {
    std::string name;
    int criterion = 0;  // 0 when the check is not part of the acceptance list
    std::string claim;
    Verdict verdict = Verdict::fail;
    nlohmann::json payload = nlohmann::json::object();
    std::int64_t micros = 0;
};

struct Report {
    std::string version = kVersion;
    std::string title;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    /// True when no check failed.
    bool ok() const;
    /// Verdict of all checks tagged with the criterion (fail if any failed,
    /// fail if there are none).
    Verdict criterion_verdict(int criterion) const;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string to_text(const Report& r, bool verbose);

/// Sample-point counts: `fallback`, or HAANTJES_TRIALS when set, never below
/// `minimum`.
int sample_count(int fallback, int minimum);

/// Runs the body, recording its verdict, payload and wall time. Exceptions
/// become a failing check with the message in the payload.
Check run_check(std::string name, int criterion, std::string claim,
                const std::function<Verdict(nlohmann::json&)>& body);

Report hessian_report(const Poly& f, int dim);

enum class SystemAction : std::uint8_t { family, ideal, radical_check, dimension, linear_subspace, branches, mechanics };

const std::vector<std::pair<std::string, SystemAction>>& system_action_names();

Report system_report(const std::string& name, const std::vector<SystemAction>& actions, std::uint64_t seed);

/// The full acceptance suite, criteria 1 to 12.
Report reproduce_checks(std::uint64_t seed);

/// Largest criterion number in the suite.
inline constexpr int kCriterionCount = 12;

}  // namespace htk
