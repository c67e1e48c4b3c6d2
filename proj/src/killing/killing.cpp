#include "htk/killing.hpp"

#include <functional>

#include "htk/haantjes.hpp"
#include "htk/linalg.hpp"

namespace htk {

namespace {

const SpaceSet kPositions{Space::x};

/// Monomials x^alpha with |alpha| <= degree, ordered by degree then
/// lexicographically (x1 before x2).
std::vector<Monomial> monomials_up_to(int dim, int degree) {
    std::vector<Monomial> out;
    std::vector<int> alpha(static_cast<std::size_t>(dim), 0);
    for (int d = 0; d <= degree; ++d) {
        // enumerate compositions of d into dim parts, first variable largest first
        std::vector<std::vector<int>> comps;
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == dim - 1) {
                alpha[static_cast<std::size_t>(pos)] = left;
                comps.push_back(alpha);
                return;
            }
            for (int e = left; e >= 0; --e) {
                alpha[static_cast<std::size_t>(pos)] = e;
                rec(pos + 1, left - e);
            }
        };
        rec(0, d);
        for (const auto& c : comps) {
            std::vector<Monomial::Factor> fs;
            for (int i = 0; i < dim; ++i)
                if (c[static_cast<std::size_t>(i)] != 0) fs.emplace_back(X(i + 1), c[static_cast<std::size_t>(i)]);
            out.emplace_back(std::move(fs));
        }
    }
    return out;
}

/// Coefficient matrix of a homogeneous linear system: each equation is a poly
/// linear in `unknowns`, required to vanish identically in the x-variables.
Matrix linear_rows(const std::vector<Poly>& equations, const std::vector<VarId>& unknowns) {
    std::map<VarId, std::size_t> column;
    for (std::size_t c = 0; c < unknowns.size(); ++c) column.emplace(unknowns[c], c);
    Matrix m(0, unknowns.size());
    for (const auto& eq : equations) {
        for (const auto& [mono, coeff] : collect(eq, kPositions)) {
            std::vector<Rational> row(unknowns.size(), Rational(0));
            for (const auto& [um, c] : coeff.terms()) {
                const auto& fs = um.factors();
                if (fs.size() != 1 || fs[0].second != 1 || !column.contains(fs[0].first))
                    throw KillingError("linear_rows: equation is not linear in the unknowns");
                row[column.at(fs[0].first)] = c;
            }
            m.append_row(row);
        }
    }
    return m;
}

/// Flattens a list of tensors into coordinate rows over (component, monomial).
Matrix coordinate_rows(const std::vector<TensorField>& ts) {
    std::map<std::pair<std::size_t, Monomial>, std::size_t> column;
    for (const auto& t : ts)
        for (std::size_t k = 0; k < t.size(); ++k)
            for (const auto& [m, c] : t.flat(k).terms()) column.try_emplace({k, m}, column.size());
    Matrix out(ts.size(), column.size());
    for (std::size_t r = 0; r < ts.size(); ++r)
        for (std::size_t k = 0; k < ts[r].size(); ++k)
            for (const auto& [m, c] : ts[r].flat(k).terms()) out(r, column.at({k, m})) = c;
    return out;
}

TensorField combine(const std::vector<TensorField>& ts, const std::vector<Rational>& coeffs) {
    TensorField out(ts.front().dim(), ts.front().slots());
    for (std::size_t r = 0; r < ts.size(); ++r)
        if (coeffs[r] != 0) out += ts[r] * Poly(coeffs[r]);
    return out;
}

std::vector<VarId> b_params(std::size_t count) {
    std::vector<VarId> ps;
    for (std::size_t i = 0; i < count; ++i) ps.push_back(B(static_cast<int>(i) + 1));
    return ps;
}

TensorField symbolic_combination(const std::vector<TensorField>& basis, const std::vector<VarId>& params) {
    TensorField out(basis.front().dim(), basis.front().slots());
    for (std::size_t i = 0; i < basis.size(); ++i) out += basis[i] * Poly(params[i]);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- family

KillingFamily::KillingFamily(int dim, std::vector<VarId> params, std::vector<TensorField> basis)
    : dim_(dim), params_(std::move(params)), basis_(std::move(basis)) {
    if (params_.size() != basis_.size()) throw KillingError("family: parameter/basis count mismatch");
    if (basis_.empty()) throw EmptyFamily("family has no parameters");
    components_ = symbolic_combination(basis_, params_);
}

std::vector<Poly> PotentialSpec::generators() const {
    std::vector<Poly> gs;
    for (const auto& t : terms) gs.push_back(t.generator);
    return gs;
}

Poly PotentialSpec::potential() const {
    Poly v;
    for (const auto& t : terms) v += Poly(t.coefficient) * t.generator;
    return v;
}

// ---------------------------------------------------------------- operations

KillingBasis killing_space(int dim) {
    if (dim < 2 || dim > 4) throw UnsupportedDimension("killing_space supports n in {2, 3, 4}, got " + std::to_string(dim));
    const auto monos = monomials_up_to(dim, 2);
    std::vector<VarId> unknowns;
    TensorField ansatz(dim, {Slot::down, Slot::down});
    int next = 1;
    std::vector<std::pair<std::pair<int, int>, Monomial>> layout;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Poly comp;
            for (const auto& m : monos) {
                VarId u = B(next++);
                unknowns.push_back(u);
                layout.push_back({{i, j}, m});
                comp += Poly(Monomial(u) * m, Rational(1));
            }
            ansatz.at({i, j}) = comp;
            ansatz.at({j, i}) = comp;
        }

    const TensorField res = killing_residual(ansatz);
    std::vector<Poly> eqs;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            for (int k = j; k < dim; ++k) eqs.push_back(res.at({i, j, k}));

    KillingBasis out{dim, {}};
    for (const auto& v : nullspace(linear_rows(eqs, unknowns))) {
        TensorField k(dim, {Slot::down, Slot::down});
        for (std::size_t u = 0; u < v.size(); ++u) {
            if (v[u] == 0) continue;
            const auto& [ij, m] = layout[u];
            Poly term(m, v[u]);
            k.at({ij.first, ij.second}) += term;
            if (ij.first != ij.second) k.at({ij.second, ij.first}) += term;
        }
        out.elements.push_back(std::move(k));
    }
    return out;
}

std::vector<TensorField> flat_killing_vectors(int dim) {
    std::vector<TensorField> vs;
    for (int i = 0; i < dim; ++i) {
        std::vector<Poly> c(static_cast<std::size_t>(dim));
        c[static_cast<std::size_t>(i)] = Poly(1L);
        vs.push_back(TensorField::one_form(std::move(c)));
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            std::vector<Poly> c(static_cast<std::size_t>(dim));
            c[static_cast<std::size_t>(j)] = Poly(X(i + 1));
            c[static_cast<std::size_t>(i)] = -Poly(X(j + 1));
            vs.push_back(TensorField::one_form(std::move(c)));
        }
    return vs;
}

TensorField symmetric_product(const TensorField& v, const TensorField& w) {
    if (v.slots() != std::vector<Slot>{Slot::down} || w.slots() != std::vector<Slot>{Slot::down})
        throw TensorError("symmetric_product: arguments must be one-forms");
    return sym_antisym(outer(v, w), {0, 1}, SymMode::sym);
}

KillingFamily compatible_family(const KillingBasis& basis, const PotentialSpec& pot) {
    if (pot.dim != basis.dim) throw KillingError("compatible_family: dimension mismatch");
    if (basis.elements.empty()) throw EmptyFamily("compatible_family: empty Killing basis");
    const auto unknowns = b_params(basis.elements.size());
    const auto op = OperatorField::from_covariant(symbolic_combination(basis.elements, unknowns));
    std::vector<Poly> eqs;
    for (const auto& u : pot.generators()) {
        auto res = conservation_check(op, u).residual;
        for (int j = 0; j < basis.dim; ++j)
            for (int k = j + 1; k < basis.dim; ++k) eqs.push_back(res.at({j, k}));
    }
    auto null = nullspace(linear_rows(eqs, unknowns));
    if (null.empty()) throw EmptyFamily("only the zero tensor is compatible with " + pot.name);

    std::vector<TensorField> fam;
    for (const auto& v : null) fam.push_back(combine(basis.elements, v));

    if (pot.reference_family) {
        auto ref = parameter_coefficients(*pot.reference_family, b_params(fam.size()));
        if (same_span(ref, fam)) return {basis.dim, b_params(ref.size()), std::move(ref)};
    }
    return {basis.dim, b_params(fam.size()), std::move(fam)};
}

TensorField specialize(const KillingFamily& family, const Bindings& values) {
    return family.components().map([&](const Poly& p) { return substitute(p, values); });
}

KillingFamily restrict_family(const KillingFamily& family, const Bindings& restriction) {
    std::vector<VarId> remaining;
    for (auto v : family.params())
        if (!restriction.contains(v)) remaining.push_back(v);
    auto comps = specialize(family, restriction);
    return {family.dim(), remaining, parameter_coefficients(comps, remaining)};
}

std::vector<TensorField> parameter_coefficients(const TensorField& t, const std::vector<VarId>& params) {
    std::vector<TensorField> out;
    TensorField rebuilt(t.dim(), t.slots());
    for (auto v : params) {
        auto c = t.map([&](const Poly& p) { return differentiate(p, v); });
        for (const auto& comp : c.components())
            for (auto w : params)
                if (comp.degree(w) != 0) throw KillingError("parameter_coefficients: tensor is not linear in parameters");
        rebuilt += c * Poly(v);
        out.push_back(std::move(c));
    }
    if (rebuilt != t) throw KillingError("parameter_coefficients: tensor has parameter-free terms");
    return out;
}

std::size_t span_rank(const std::vector<TensorField>& ts) {
    if (ts.empty()) return 0;
    return rank(coordinate_rows(ts));
}

bool same_span(const std::vector<TensorField>& a, const std::vector<TensorField>& b) {
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto r = span_rank(both);
    return span_rank(a) == r && span_rank(b) == r;
}

}  // namespace htk
