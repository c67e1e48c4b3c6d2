#pragma once

// Groebner bases over Q[v1..vm]: membership, radical membership via the
// Rabinowitsch trick, Krull dimension from leading monomials, and linear
// factor detection.

#include <memory>
#include <mutex>

#include "htk/killing.hpp"

namespace htk {

class IdealError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnitIdeal : public IdealError {
public:
    UnitIdeal() : IdealError("ideal is the unit ideal") {}
};

class ZeroIdeal : public IdealError {
public:
    explicit ZeroIdeal(int dimension)
        : IdealError("ideal is the zero ideal; dimension equals the variable count"), dimension(dimension) {}
    int dimension;
};

enum class OrderKind : std::uint8_t { grevlex, lex };

/// Monomial order over an ordered variable list. `vars` is given in
/// increasing order: vars.front() is the smallest variable.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<VarId> vars;

    static MonomialOrder grevlex(std::vector<VarId> vars) { return {OrderKind::grevlex, std::move(vars)}; }
    static MonomialOrder lex(std::vector<VarId> vars) { return {OrderKind::lex, std::move(vars)}; }

    /// Same kind with an extra variable appended as the new largest one.
    MonomialOrder extended(VarId v) const;

    /// Three-way comparison of two monomials in `vars`.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// b1 < b2 < ... < bm
std::vector<VarId> b_variables(int count);

class Ideal {
public:
    Ideal(std::vector<Poly> generators, MonomialOrder order);

    const std::vector<Poly>& generators() const { return generators_; }
    const MonomialOrder& order() const { return order_; }
    bool is_zero() const { return generators_.empty(); }

    /// Reduced, monic Groebner basis sorted by increasing leading monomial.
    /// Computed once and cached.
    const std::vector<Poly>& groebner_basis() const;

    Poly normal_form(const Poly& f) const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<Poly> basis;
    };

    std::vector<Poly> generators_;
    MonomialOrder order_;
    std::shared_ptr<Cache> cache_;
};

std::vector<Poly> groebner(const Ideal& ideal);
/// Normal form of f by the given basis (full reduction).
Poly reduce(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order);
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);
/// Buchberger criterion: every S-polynomial reduces to zero.
bool s_pairs_reduce_to_zero(const std::vector<Poly>& basis, const MonomialOrder& order);
Monomial leading_monomial(const Poly& f, const MonomialOrder& order);

bool member(const Poly& f, const Ideal& ideal);
/// f in rad(I) iff 1 in I + <1 - t f> with t a fresh variable.
bool radical_member(const Poly& f, const Ideal& ideal);
/// Mutual generator membership.
bool ideal_equal(const Ideal& a, const Ideal& b);
/// Krull dimension of Q[vars]/I: the largest variable subset containing the
/// support of no leading monomial of the Groebner basis.
int hilbert_dimension(const Ideal& ideal);

/// Linear polynomials l (normalized so the first variable present has
/// coefficient 1) with l | f.
std::vector<Poly> linear_factors(const Poly& f);

/// Ideal generated by the x-coefficients of the Haantjes tensor of the family,
/// with generators replaced by a reduced echelon basis of their Q-span.
Ideal haantjes_zero_ideal(const KillingFamily& family);

/// q with f = g * q when g divides f exactly; nullopt otherwise.
std::optional<Poly> exact_quotient(const Poly& f, const Poly& g, const MonomialOrder& order);

nlohmann::json to_json(const Ideal& ideal);
Ideal ideal_from_json(const nlohmann::json& j);

}  // namespace htk
