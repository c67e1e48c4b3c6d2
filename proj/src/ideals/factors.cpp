#include <algorithm>

#include "htk/haantjes.hpp"
#include "htk/ideals.hpp"
#include "htk/linalg.hpp"

namespace htk {

namespace {

const SpaceSet kPositions{Space::x};

/// Positive divisors of |n| (n != 0). Returns nullopt when n has a cofactor
/// too large to split by trial division.
std::optional<std::vector<Integer>> divisors(Integer n) {
    n = abs(n);
    std::vector<std::pair<Integer, int>> primes;
    for (Integer p = 2; p * p <= n; ++p) {
        if (p > 2000000) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
            break;
        }
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) primes.emplace_back(p, e);
    }
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<Integer> out{1};
    for (const auto& [p, e] : primes) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

Rational horner(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

/// Rational roots of a univariate polynomial in v, or nullopt if the
/// polynomial vanishes identically or its coefficients are too hard to split.
std::optional<std::set<Rational>> rational_roots(const Poly& g, VarId v) {
    if (g.is_zero()) return std::nullopt;
    const int deg = g.degree(v);
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& [m, c] : g.terms()) coeffs[static_cast<std::size_t>(m.degree(v))] = c;

    Integer den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : coeffs) ints.push_back(Integer(c.get_num() * (den / c.get_den())));

    std::set<Rational> roots;
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) roots.insert(Rational(0));
    if (low == ints.size() - 1) return roots;

    auto ps = divisors(ints[low]);
    auto qs = divisors(ints.back());
    if (!ps || !qs) return std::nullopt;
    for (const auto& p : *ps)
        for (const auto& q : *qs)
            for (int sign : {1, -1}) {
                Rational r(Integer(sign * p), q);
                r.canonicalize();
                if (horner(coeffs, r) == 0) roots.insert(r);
            }
    return roots;
}

Poly normalize_linear(const Poly& l) {
    const auto vars = l.variables();
    Rational lead = l.coefficient(Monomial(*vars.begin()));
    return l * Rational(1 / lead);
}

/// Linear factors of the form v - r(others), found by interpolating rational
/// roots of f restricted to lines through a base point.
std::vector<Poly> factors_solving_for(const Poly& f, VarId v, const std::vector<VarId>& others, int attempt) {
    static const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    Assignment base;
    for (std::size_t i = 0; i < others.size(); ++i)
        base[others[i]] = Rational(kPrimes[(i + static_cast<std::size_t>(attempt)) % 16] + 3 * attempt);

    auto roots_at = [&](const Assignment& pt) { return rational_roots(substitute(f, pt), v); };
    auto r0 = roots_at(base);
    if (!r0) throw IdealError("retry");

    std::vector<std::vector<std::set<Rational>>> line(others.size());
    for (std::size_t i = 0; i < others.size(); ++i)
        for (int t = 1; t <= 2; ++t) {
            Assignment pt = base;
            pt[others[i]] += t;
            auto r = roots_at(pt);
            if (!r) throw IdealError("retry");
            line[i].push_back(std::move(*r));
        }

    std::vector<Poly> out;
    for (const auto& root : *r0) {
        std::vector<std::vector<Rational>> slopes(others.size());
        bool viable = true;
        for (std::size_t i = 0; i < others.size() && viable; ++i) {
            for (const auto& r1 : line[i][0]) {
                Rational s = r1 - root;
                if (line[i][1].contains(Rational(root + 2 * s))) slopes[i].push_back(s);
            }
            viable = !slopes[i].empty();
        }
        if (!viable) continue;

        std::vector<std::size_t> pick(others.size(), 0);
        for (std::size_t combos = 0; combos < 4096; ++combos) {
            Poly r(root);
            for (std::size_t i = 0; i < others.size(); ++i) {
                const Rational& s = slopes[i][pick[i]];
                r += Poly(others[i]) * s - Poly(Rational(s * base.at(others[i])));
            }
            if (substitute(f, Bindings{{v, r}}).is_zero()) out.push_back(normalize_linear(Poly(v) - r));
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == slopes[k].size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
    }
    return out;
}

}  // namespace

std::vector<Poly> linear_factors(const Poly& f) {
    if (f.is_zero()) throw IdealError("linear_factors of the zero polynomial");
    if (f.has_negative_exponent()) throw IdealError("linear_factors requires a polynomial");
    const auto vars = f.variables();
    std::vector<Poly> out;
    for (auto v : vars) {
        if (f.degree(v) == 0) continue;
        std::vector<VarId> others;
        for (auto w : vars)
            if (w != v) others.push_back(w);
        std::vector<Poly> found;
        bool done = false;
        for (int attempt = 0; attempt < 8 && !done; ++attempt) {
            try {
                found = factors_solving_for(f, v, others, attempt);
                done = true;
            } catch (const IdealError&) {
                // base point was degenerate; move it
            }
        }
        if (!done) throw IdealError("linear_factors: no usable base point for " + v.name());
        for (auto& l : found)
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.to_string() < b.to_string(); });
    return out;
}

Ideal haantjes_zero_ideal(const KillingFamily& family) {
    const auto h = haantjes(OperatorField::from_covariant(family.components()));
    std::map<Monomial, std::size_t> column;
    std::vector<Poly> coeffs;
    for (const auto& comp : h.components())
        for (const auto& [xm, c] : collect(comp, kPositions)) {
            if (c.is_zero()) continue;
            for (const auto& [m, q] : c.terms()) column.try_emplace(m, 0);
            coeffs.push_back(c);
        }
    // Columns in decreasing monomial order so echelon rows start at their
    // leading term.
    std::vector<Monomial> monos;
    for (auto& [m, idx] : column) monos.push_back(m);
    std::reverse(monos.begin(), monos.end());
    for (std::size_t i = 0; i < monos.size(); ++i) column[monos[i]] = i;

    Matrix m(0, monos.size());
    for (const auto& c : coeffs) {
        std::vector<Rational> row(monos.size(), Rational(0));
        for (const auto& [mono, q] : c.terms()) row[column.at(mono)] = q;
        m.append_row(row);
    }
    m.rref();
    std::vector<Poly> gens;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Poly::Term> ts;
        for (std::size_t k = 0; k < monos.size(); ++k)
            if (m(r, k) != 0) ts.emplace_back(monos[k], m(r, k));
        gens.push_back(Poly::from_terms(std::move(ts)));
    }
    return {std::move(gens), MonomialOrder::grevlex(family.params())};
}

}  // namespace htk
