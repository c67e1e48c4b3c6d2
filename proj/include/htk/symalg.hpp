#pragma once

// Exact rational and multivariate Laurent-polynomial arithmetic.
//
// Every scalar expression in the toolkit is a Poly: a finite sum of rational
// multiples of monomials in a fixed set of namespaced variables. Only the
// position namespace (x) may carry negative exponents; this covers the
// inverse-square potentials without needing a fraction field.

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace htk {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Variable namespaces: positions, momenta, family parameters, potential
/// parameters, integration constants and the auxiliary Rabinowitsch variable.
enum class Space : std::uint8_t { x, p, b, a, c, t };

char space_letter(Space s);

struct VarId {
    Space space = Space::x;
    std::uint16_t index = 0;

    constexpr VarId() = default;
    constexpr VarId(Space s, int i) : space(s), index(static_cast<std::uint16_t>(i)) {}

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;

    std::string name() const;
};

constexpr VarId X(int i) { return {Space::x, i}; }
constexpr VarId P(int i) { return {Space::p, i}; }
constexpr VarId B(int i) { return {Space::b, i}; }
constexpr VarId A(int i) { return {Space::a, i}; }
constexpr VarId C(int i) { return {Space::c, i}; }
constexpr VarId T(int i) { return {Space::t, i}; }

using SpaceSet = std::set<Space>;

class SymalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonInvertibleSubstitution : public SymalgError {
public:
    using SymalgError::SymalgError;
};

class LogarithmicTerm : public SymalgError {
public:
    using SymalgError::SymalgError;
};

class ParseError : public SymalgError {
public:
    using SymalgError::SymalgError;
};

/// Power product of variables. Factors are kept sorted by VarId with no zero
/// exponents, so structural equality is mathematical equality.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(VarId v, int exponent = 1);
    explicit Monomial(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree(VarId v) const;
    int total_degree() const;
    bool has_negative_exponent() const;
    bool involves(const SpaceSet& spaces) const;

    /// Splits into the part with variables in `spaces` and the rest.
    std::pair<Monomial, Monomial> split(const SpaceSet& spaces) const;

    Monomial without(VarId v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded order: total degree first, then lexicographic with smaller
    /// VarId more significant. Used only for canonical storage and printing.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::string to_string() const;

private:
    void check_exponents() const;
    std::vector<Factor> factors_;
};

using Assignment = std::map<VarId, Rational>;
using Bindings = std::map<VarId, class Poly>;

class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit Poly(VarId v, int exponent = 1);
    Poly(const Monomial& m, const Rational& c);

    /// Terms sorted by descending Monomial order; no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    std::set<VarId> variables() const;
    int degree(VarId v) const;
    int min_degree(VarId v) const;
    int total_degree() const;
    bool has_negative_exponent() const;
    bool involves(const SpaceSet& spaces) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly&, const Poly&) = default;

    Rational evaluate(const Assignment& values) const;

    std::string to_string() const;
    static Poly parse(std::string_view text);

    /// Builds a poly from unsorted terms, merging duplicates.
    static Poly from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;
};

Poly pow(const Poly& base, unsigned exponent);
Poly differentiate(const Poly& f, VarId v);
/// Simultaneous substitution. Variables bound while carrying a negative
/// exponent must map to a single-term poly.
Poly substitute(const Poly& f, const Bindings& bindings);
/// Substitutes rational values for the bound variables; others stay symbolic.
Poly substitute(const Poly& f, const Assignment& values);
/// f = Σ m · coeff[m], where m ranges over monomials in `on` and the
/// coefficients contain no variable from `on`.
std::map<Monomial, Poly> collect(const Poly& f, const SpaceSet& on);
/// Antiderivative in v with zero integration constant.
Poly laurent_integrate(const Poly& f, VarId v);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, VarId v);

}  // namespace htk
