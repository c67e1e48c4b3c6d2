#pragma once

#include "htk/report.hpp"

namespace htk::detail {

Verdict verdict(bool ok);

std::string component_label(const std::string& name, const std::vector<Slot>& slots, const Index& idx);
nlohmann::json nonzero_components(const std::string& name, const TensorField& t);
nlohmann::json poly_list(const std::vector<Poly>& ps);
nlohmann::json matrix_json(const TensorField& t);

/// den^d * f(v := num/den) with d the degree of f in v.
Poly clear_substitution(const Poly& f, VarId v, const Poly& num, const Poly& den);

Check family_check(const PotentialSpec& spec, const KillingFamily& family, int criterion);
Check radical_check(const PotentialSpec& spec, const Ideal& ideal, int criterion);
Check branch_check(int criterion);
Check mechanics_check(const PotentialSpec& spec, const KillingFamily& family, std::uint64_t seed, int criterion);

}  // namespace htk::detail
