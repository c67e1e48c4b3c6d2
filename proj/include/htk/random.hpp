#pragma once

// Seeded generators of small random polynomials and operator fields, shared by
// the property checks and the test suites.

#include <random>

#include "htk/tensor.hpp"

namespace htk {

class RandomPolys {
public:
    explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi);
    /// Nonzero rational with |num| <= 9 and den <= 4.
    Rational coefficient();
    /// Up to `max_terms` terms in `vars` with exponents in [min_exp, max_exp]
    /// and total degree <= max_degree (measured on nonnegative exponents).
    /// Negative exponents are only drawn for x variables.
    Poly poly(const std::vector<VarId>& vars, int max_degree, int max_terms, int min_exp = 0);
    /// (1,1) field on R^dim with polynomial entries.
    TensorField operator_field(int dim, int max_degree, int max_terms);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

std::vector<VarId> position_variables(int dim);
std::vector<VarId> momentum_variables(int dim);

}  // namespace htk
