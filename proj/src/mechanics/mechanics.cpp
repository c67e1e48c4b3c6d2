#include "htk/mechanics.hpp"

#include "htk/haantjes.hpp"

namespace htk {

namespace {

std::size_t ipow(int n, int k) {
    std::size_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
    return r;
}

/// Row-major offset for a dense cube of side n.
std::size_t flat_index(int n, std::initializer_list<int> idx) {
    std::size_t off = 0;
    for (int i : idx) off = off * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
    return off;
}

void require_square_covariant(const TensorField& k, const char* who) {
    if (k.slots() != std::vector<Slot>{Slot::down, Slot::down})
        throw SlotKindMismatch(std::string(who) + ": expected a (0,2) tensor");
}

/// Determinant by cofactor expansion along the first row of the minor
/// selected by `rows` and `cols`.
Poly minor_det(const TensorField& k, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return k.at({rows[0], cols[0]});
    Poly det;
    const int r = rows.front();
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Poly& entry = k.at({r, cols[c]});
        if (entry.is_zero()) continue;
        std::vector<int> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(c));
        Poly term = entry * minor_det(k, sub_rows, sub_cols);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

std::vector<int> all_but(int n, int skip) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (i != skip) out.push_back(i);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- phase space

PhaseFunction::PhaseFunction(int dim, Poly f) : dim_(dim), f_(std::move(f)) {
    for (const auto& [m, c] : f_.terms())
        for (const auto& [v, e] : m.factors()) {
            if ((v.space == Space::x || v.space == Space::p) && (v.index < 1 || v.index > dim))
                throw MechanicsError("phase function: " + v.name() + " is outside dimension " + std::to_string(dim));
            if (e < 0 && v.space != Space::x)
                throw MechanicsError("phase function: negative exponent on " + v.name());
        }
}

PhaseFunction poisson(const PhaseFunction& f, const PhaseFunction& g) {
    if (f.dim() != g.dim()) throw MechanicsError("poisson: dimension mismatch");
    Poly out;
    for (int k = 1; k <= f.dim(); ++k) {
        out += differentiate(f.poly(), P(k)) * differentiate(g.poly(), X(k));
        out -= differentiate(f.poly(), X(k)) * differentiate(g.poly(), P(k));
    }
    return {f.dim(), std::move(out)};
}

PhaseFunction hamiltonian(int dim, const Poly& potential) {
    Poly h = potential;
    for (int k = 1; k <= dim; ++k) h += Poly(P(k), 2);
    return {dim, std::move(h)};
}

TensorField dual_differential(const TensorField& k, const Poly& v) {
    require_square_covariant(k, "dual_differential");
    std::vector<Poly> omega(static_cast<std::size_t>(k.dim()));
    for (int i = 0; i < k.dim(); ++i)
        for (int j = 0; j < k.dim(); ++j) omega[static_cast<std::size_t>(i)] += k.at({i, j}) * differentiate(v, X(j + 1));
    return TensorField::one_form(std::move(omega));
}

PhaseFunction build_integral(const TensorField& k, const PotentialSpec& pot, const Bindings& coefficients) {
    require_square_covariant(k, "build_integral");
    const int n = k.dim();
    if (n != pot.dim) throw MechanicsError("build_integral: dimension mismatch");
    const auto op = OperatorField::from_covariant(k);
    for (const auto& u : pot.generators())
        if (!conservation_check(op, u).is_conservation_law())
            throw NotCompatible("Killing tensor is not compatible with generator " + u.to_string());

    const Poly v = substitute(pot.potential(), coefficients);
    const TensorField omega = dual_differential(k, v);

    // Staircase: integrate the remaining x_i-component in x_i.
    Poly w;
    for (int i = 0; i < n; ++i) {
        Poly rest = omega.at({i}) - differentiate(w, X(i + 1));
        w += laurent_integrate(rest, X(i + 1));
    }
    for (int i = 0; i < n; ++i)
        if (differentiate(w, X(i + 1)) != omega.at({i}))
            throw NotCompatible("K*dV is not closed; no potential W exists");

    Poly f = w;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f += k.at({i, j}) * Poly(P(i + 1)) * Poly(P(j + 1));
    return {n, std::move(f)};
}

// ---------------------------------------------------------------- sampling

Rational SamplePoints::value() {
    std::uniform_int_distribution<int> num(1, 20);
    std::uniform_int_distribution<int> den(1, 7);
    std::bernoulli_distribution negative(0.5);
    int a = num(rng_);
    if (negative(rng_)) a = -a;
    Rational q(a, den(rng_));
    q.canonicalize();
    return q;
}

std::vector<Rational> SamplePoints::point(int dim) {
    std::vector<Rational> pt;
    for (int i = 0; i < dim; ++i) pt.push_back(value());
    return pt;
}

bool IndependenceResult::stable() const {
    return std::all_of(trial_ranks.begin(), trial_ranks.end(), [&](int r) { return r == rank; });
}

IndependenceResult functional_independence(const std::vector<PhaseFunction>& fs, int trials, SamplePoints& rng) {
    IndependenceResult out;
    if (fs.empty()) return out;
    const int n = fs.front().dim();
    std::vector<VarId> phase;
    for (int k = 1; k <= n; ++k) phase.push_back(X(k));
    for (int k = 1; k <= n; ++k) phase.push_back(P(k));
    std::set<VarId> symbols;
    std::vector<std::vector<Poly>> jac;
    for (const auto& f : fs) {
        if (f.dim() != n) throw MechanicsError("functional_independence: dimension mismatch");
        for (auto v : f.poly().variables())
            if (v.space != Space::x && v.space != Space::p) symbols.insert(v);
        std::vector<Poly> row;
        for (auto v : phase) row.push_back(differentiate(f.poly(), v));
        jac.push_back(std::move(row));
    }
    for (int t = 0; t < trials; ++t) {
        Assignment at;
        for (auto v : phase) at[v] = rng.value();
        for (auto v : symbols) at[v] = rng.value();
        Matrix m(0, phase.size());
        for (const auto& row : jac) {
            std::vector<Rational> vals;
            for (const auto& d : row) vals.push_back(d.evaluate(at));
            m.append_row(vals);
        }
        int r = static_cast<int>(rank(std::move(m)));
        out.trial_ranks.push_back(r);
        out.rank = std::max(out.rank, r);
    }
    return out;
}

// ---------------------------------------------------------------- structural tensor

const Rational& StructuralTensor::operator()(int a, int b, int i, int j, int k) const {
    return data[flat_index(dim, {a, b, i, j, k})];
}

Rational& StructuralTensor::operator()(int a, int b, int i, int j, int k) {
    return data[flat_index(dim, {a, b, i, j, k})];
}

bool StructuralTensor::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Rational& q) { return q == 0; });
}

StructuralTensor structural_tensor_at(const KillingFamily& family, std::span<const Rational> x0) {
    const int n = family.dim();
    std::vector<TensorValue> ks, dks;
    for (const auto& k : family.basis()) {
        ks.push_back(evaluate(k, x0));
        dks.push_back(evaluate(partial_derivative(k), x0));
    }
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) pairs.emplace_back(a, b);

    Matrix m(ks.size(), pairs.size());
    for (std::size_t r = 0; r < ks.size(); ++r)
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            auto [a, b] = pairs[c];
            m(r, c) = ks[r].at({a, b}) * (a == b ? 1 : 2);
        }
    if (rank(m) < pairs.size())
        throw NonUniqueSolution("structural tensor: evaluation matrix is singular at this point");

    StructuralTensor p{n, std::vector<Rational>(ipow(n, 5), Rational(0))};
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::vector<Rational> rhs;
                for (const auto& dk : dks) rhs.push_back(dk.at({i, j, k}));
                auto sol = solve_unique(m, rhs);
                if (!sol) throw Inconsistent("structural tensor: no P reproduces dK for every family element");
                for (std::size_t c = 0; c < pairs.size(); ++c) {
                    auto [a, b] = pairs[c];
                    for (auto [aa, bb] : {std::pair{a, b}, std::pair{b, a}})
                        for (auto [ii, jj] : {std::pair{i, j}, std::pair{j, i}}) p(aa, bb, ii, jj, k) = (*sol)[c];
                }
            }
    return p;
}

TensorValue abundant_haantjes(const StructuralTensor& p, const TensorField& k, std::span<const Rational> x0) {
    require_square_covariant(k, "abundant_haantjes");
    const int n = k.dim();
    if (p.dim != n) throw MechanicsError("abundant_haantjes: dimension mismatch");
    if (n > 3) throw MechanicsError("abundant_haantjes: the materialized 11-index tensor is limited to n <= 3");
    const TensorValue kv = evaluate(k, x0);
    auto K = [&](int a, int b) -> const Rational& { return kv.at({a, b}); };
    auto delta = [](int a, int b) { return a == b ? 1 : 0; };

    // Q^{ci}_{djk}, stored as (c, i, d, j, k).
    std::vector<Rational> q(ipow(n, 5));
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < n; ++d)
                for (int j = 0; j < n; ++j)
                    for (int kk = 0; kk < n; ++kk) q[flat_index(n, {c, i, d, j, kk})] = p(c, d, i, j, kk);
    auto Q = [&](int c, int i, int d, int j, int kk) -> const Rational& { return q[flat_index(n, {c, i, d, j, kk})]; };

    // U^{icb}_{dajk}, stored as (i, c, b, d, a, j, k).
    std::vector<Rational> u(ipow(n, 7));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c)
            for (int b = 0; b < n; ++b)
                for (int d = 0; d < n; ++d)
                    for (int a = 0; a < n; ++a)
                        for (int j = 0; j < n; ++j)
                            for (int kk = 0; kk < n; ++kk) {
                                Rational v = 0;
                                if (b == j) v += Q(c, i, d, kk, a);
                                if (b == kk) v -= Q(c, i, d, j, a);
                                if (i == a) v += Q(c, b, d, j, kk) - Q(c, b, d, kk, j);
                                u[flat_index(n, {i, c, b, d, a, j, kk})] = v;
                            }
    auto U = [&](int i, int c, int b, int d, int a, int j, int kk) -> const Rational& {
        return u[flat_index(n, {i, c, b, d, a, j, kk})];
    };

    // UU^{i cmqv}_{jk drpm}, stored as (i, j, k, c, m, q, v, d, r, p, mu).
    std::vector<Rational> uu(ipow(n, 11));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk)
                for (int c = 0; c < n; ++c)
                    for (int m = 0; m < n; ++m)
                        for (int qq = 0; qq < n; ++qq)
                            for (int nu = 0; nu < n; ++nu)
                                for (int d = 0; d < n; ++d)
                                    for (int r = 0; r < n; ++r)
                                        for (int pp = 0; pp < n; ++pp)
                                            for (int mu = 0; mu < n; ++mu) {
                                                Rational v = 0;
                                                if (delta(mu, i) && delta(nu, pp)) v += U(qq, c, m, d, r, j, kk);
                                                if (delta(qq, j) && delta(nu, kk)) v += U(i, c, m, d, r, pp, mu);
                                                if (delta(pp, i) && delta(nu, j)) v -= U(qq, c, m, d, r, mu, kk);
                                                if (delta(pp, i) && delta(nu, kk)) v -= U(qq, c, m, d, r, j, mu);
                                                uu[flat_index(n, {i, j, kk, c, m, qq, nu, d, r, pp, mu})] = v;
                                            }

    TensorValue h{n, {Slot::up, Slot::down, Slot::down}, std::vector<Rational>(ipow(n, 3), Rational(0))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int kk = 0; kk < n; ++kk) {
                Rational sum = 0;
                for (int c = 0; c < n; ++c)
                    for (int m = 0; m < n; ++m)
                        for (int qq = 0; qq < n; ++qq)
                            for (int nu = 0; nu < n; ++nu)
                                for (int d = 0; d < n; ++d)
                                    for (int r = 0; r < n; ++r)
                                        for (int pp = 0; pp < n; ++pp)
                                            for (int mu = 0; mu < n; ++mu) {
                                                const Rational& coeff =
                                                    uu[flat_index(n, {i, j, kk, c, m, qq, nu, d, r, pp, mu})];
                                                if (coeff == 0) continue;
                                                sum += coeff * K(d, c) * K(r, m) * K(pp, qq) * K(mu, nu);
                                            }
                h.at({i, j, kk}) = sum;
            }
    return h;
}

// ---------------------------------------------------------------- K_{m[k,n]l} identity

Poly determinant(const TensorField& k) {
    require_square_covariant(k, "determinant");
    return minor_det(k, all_but(k.dim(), -1), all_but(k.dim(), -1));
}

TensorField adjugate(const TensorField& k) {
    require_square_covariant(k, "adjugate");
    const int n = k.dim();
    TensorField adj(n, {Slot::up, Slot::up});
    if (n == 1) {
        adj.at({0, 0}) = Poly(1L);
        return adj;
    }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            // Adj^{pq} = (-1)^{p+q} det of K with row q and column p removed.
            Poly m = minor_det(k, all_but(n, q), all_but(n, p));
            adj.at({p, q}) = (p + q) % 2 == 0 ? m : -m;
        }
    return adj;
}

Condition6b condition_6b(const TensorField& k) {
    require_square_covariant(k, "condition_6b");
    const int n = k.dim();
    const Poly det = determinant(k);
    if (det.is_zero()) throw DegenerateK("condition_6b: det K vanishes identically");
    const TensorField adj = adjugate(k);
    const TensorField dk = partial_derivative(k);     // (p, l, m) = d_m K_pl
    const TensorField ddk = partial_derivative(dk);   // (m, k, n, l) = d_l d_n K_mk

    // Unnormalized brackets; the 1/2 convention rescales them.
    TensorField bracket(n, {Slot::down, Slot::down, Slot::down});  // d_m K_pl - d_l K_pm
    for (int p = 0; p < n; ++p)
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m) bracket.at({p, l, m}) = dk.at({p, l, m}) - dk.at({p, m, l});

    Condition6b out;
    for (const Rational& s : {Rational(1, 2), Rational(1)}) {
        TensorField res(n, {Slot::down, Slot::down, Slot::down, Slot::down});
        for (int m = 0; m < n; ++m)
            for (int kk = 0; kk < n; ++kk)
                for (int nn = 0; nn < n; ++nn)
                    for (int l = 0; l < n; ++l) {
                        Poly lhs = (ddk.at({m, kk, nn, l}) - ddk.at({m, nn, kk, l})) * s;
                        Poly quad;
                        for (int p = 0; p < n; ++p)
                            for (int q = 0; q < n; ++q) {
                                if (adj.at({p, q}).is_zero()) continue;
                                quad += adj.at({p, q}) * bracket.at({p, l, m}) * bracket.at({q, kk, nn});
                            }
                        res.at({m, kk, nn, l}) = det * lhs + quad * Rational(s * s / 3);
                    }
        if (s != 1) {
            out.holds = res.is_zero();
            out.residual = res;
        } else {
            out.holds_unnormalized = res.is_zero();
        }
    }
    for (std::size_t off = 0; off < out.residual.size(); ++off)
        if (!out.residual.flat(off).is_zero()) {
            out.witness = out.residual.unravel(off);
            break;
        }
    return out;
}

}  // namespace htk
