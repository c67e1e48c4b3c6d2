#include <algorithm>

#include "htk/ideals.hpp"

namespace htk {

namespace {

using Exp = std::vector<int>;

struct GTerm {
    Exp e;
    Rational c;
};

using GPoly = std::vector<GTerm>;  // descending in the ring order

class Ring {
public:
    explicit Ring(const MonomialOrder& order) : order_(order) {
        for (std::size_t i = 0; i < order.vars.size(); ++i) index_.emplace(order.vars[i], i);
    }

    std::size_t nvars() const { return order_.vars.size(); }

    std::strong_ordering cmp(const Exp& a, const Exp& b) const {
        const std::size_t n = nvars();
        if (order_.kind == OrderKind::grevlex) {
            int da = 0, db = 0;
            for (std::size_t i = 0; i < n; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da <=> db;
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return b[i] <=> a[i];
            return std::strong_ordering::equal;
        }
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    Exp exponent(const Monomial& m) const {
        Exp e(nvars(), 0);
        for (const auto& [v, k] : m.factors()) {
            auto it = index_.find(v);
            if (it == index_.end()) throw IdealError("variable " + v.name() + " is not in the ring");
            if (k < 0) throw IdealError("ideal generators must be polynomials (negative exponent on " + v.name() + ")");
            e[it->second] = k;
        }
        return e;
    }

    Monomial monomial(const Exp& e) const {
        std::vector<Monomial::Factor> fs;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) fs.emplace_back(order_.vars[i], e[i]);
        return Monomial(std::move(fs));
    }

    GPoly from_poly(const Poly& f) const {
        GPoly g;
        g.reserve(f.size());
        for (const auto& [m, c] : f.terms()) g.push_back({exponent(m), c});
        sort(g);
        return g;
    }

    Poly to_poly(const GPoly& g) const {
        std::vector<Poly::Term> ts;
        for (const auto& t : g) ts.emplace_back(monomial(t.e), t.c);
        return Poly::from_terms(std::move(ts));
    }

    void sort(GPoly& g) const {
        std::sort(g.begin(), g.end(), [&](const GTerm& l, const GTerm& r) { return cmp(l.e, r.e) > 0; });
    }

    /// p - c * x^shift * g
    GPoly sub_mul(const GPoly& p, const Rational& c, const Exp& shift, const GPoly& g) const {
        GPoly out;
        out.reserve(p.size() + g.size());
        auto i = p.begin();
        auto j = g.begin();
        Exp e(nvars());
        auto shifted = [&](const GTerm& t) {
            for (std::size_t k = 0; k < nvars(); ++k) e[k] = t.e[k] + shift[k];
            return e;
        };
        while (j != g.end()) {
            const Exp& ej = shifted(*j);
            if (i != p.end()) {
                auto o = cmp(i->e, ej);
                if (o > 0) {
                    out.push_back(*i++);
                    continue;
                }
                if (o == 0) {
                    Rational s = i->c - c * j->c;
                    if (s != 0) out.push_back({i->e, std::move(s)});
                    ++i;
                    ++j;
                    continue;
                }
            }
            out.push_back({ej, Rational(-c * j->c)});
            ++j;
        }
        out.insert(out.end(), i, p.end());
        return out;
    }

    static bool divides(const Exp& a, const Exp& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] > b[k]) return false;
        return true;
    }

    static Exp lcm(const Exp& a, const Exp& b) {
        Exp e(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) e[k] = std::max(a[k], b[k]);
        return e;
    }

    static Exp quotient(const Exp& a, const Exp& b) {
        Exp e(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) e[k] = a[k] - b[k];
        return e;
    }

    static void make_monic(GPoly& g) {
        if (g.empty()) return;
        Rational inv = 1 / g.front().c;
        for (auto& t : g) t.c *= inv;
    }

    /// Full reduction of f by the basis.
    GPoly reduce(GPoly p, const std::vector<GPoly>& basis) const {
        GPoly rem;
        while (!p.empty()) {
            const GPoly* red = nullptr;
            for (const auto& g : basis)
                if (!g.empty() && divides(g.front().e, p.front().e)) {
                    red = &g;
                    break;
                }
            if (red == nullptr) {
                rem.push_back(std::move(p.front()));
                p.erase(p.begin());
                continue;
            }
            Rational c = p.front().c / red->front().c;
            p = sub_mul(p, c, quotient(p.front().e, red->front().e), *red);
        }
        return rem;
    }

    GPoly spoly(const GPoly& f, const GPoly& g) const {
        Exp l = lcm(f.front().e, g.front().e);
        GPoly a = sub_mul({}, Rational(-1) / f.front().c, quotient(l, f.front().e), f);
        return sub_mul(a, 1 / g.front().c, quotient(l, g.front().e), g);
    }

    std::vector<GPoly> buchberger(std::vector<GPoly> input) const {
        std::vector<GPoly> basis;
        for (auto& f : input) {
            f = reduce(std::move(f), basis);
            if (f.empty()) continue;
            make_monic(f);
            basis.push_back(std::move(f));
        }

        struct Pair {
            std::size_t i, j;
            Exp lcm;
        };
        std::vector<Pair> pending;
        auto is_pending = [&](std::size_t a, std::size_t b) {
            if (a > b) std::swap(a, b);
            return std::any_of(pending.begin(), pending.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
        };
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) pending.push_back({i, j, lcm(basis[i].front().e, basis[j].front().e)});

        while (!pending.empty()) {
            auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& l, const Pair& r) {
                auto o = cmp(l.lcm, r.lcm);
                if (o != 0) return o < 0;
                return std::tie(l.j, l.i) < std::tie(r.j, r.i);
            });
            Pair pr = *best;
            pending.erase(best);
            const Exp& li = basis[pr.i].front().e;
            const Exp& lj = basis[pr.j].front().e;
            // Product criterion.
            bool coprime = true;
            for (std::size_t k = 0; k < nvars(); ++k)
                if (li[k] != 0 && lj[k] != 0) coprime = false;
            if (coprime) continue;
            // Chain criterion.
            bool chain = false;
            for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (divides(basis[k].front().e, pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
            }
            if (chain) continue;

            GPoly h = reduce(spoly(basis[pr.i], basis[pr.j]), basis);
            if (h.empty()) continue;
            make_monic(h);
            const std::size_t n = basis.size();
            basis.push_back(std::move(h));
            for (std::size_t i = 0; i < n; ++i) pending.push_back({i, n, lcm(basis[i].front().e, basis[n].front().e)});
        }

        // Minimize, then inter-reduce.
        std::vector<GPoly> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
                if (i == j || !divides(basis[j].front().e, basis[i].front().e)) continue;
                // Equal leading monomials: keep the earliest.
                redundant = basis[j].front().e != basis[i].front().e || j < i;
            }
            if (!redundant) minimal.push_back(basis[i]);
        }
        std::vector<GPoly> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<GPoly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            GPoly head{minimal[i].front()};
            GPoly tail(minimal[i].begin() + 1, minimal[i].end());
            GPoly r = reduce(std::move(tail), others);
            head.insert(head.end(), r.begin(), r.end());
            make_monic(head);
            reduced.push_back(std::move(head));
        }
        std::sort(reduced.begin(), reduced.end(),
                  [&](const GPoly& l, const GPoly& r) { return cmp(l.front().e, r.front().e) < 0; });
        return reduced;
    }

private:
    const MonomialOrder& order_;
    std::map<VarId, std::size_t> index_;
};

std::vector<GPoly> to_gpolys(const Ring& ring, const std::vector<Poly>& ps) {
    std::vector<GPoly> out;
    for (const auto& p : ps) out.push_back(ring.from_poly(p));
    return out;
}

}  // namespace

MonomialOrder MonomialOrder::extended(VarId v) const {
    MonomialOrder o = *this;
    if (std::find(o.vars.begin(), o.vars.end(), v) != o.vars.end()) throw IdealError("variable already in order");
    o.vars.push_back(v);
    return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    Ring ring(*this);
    return ring.cmp(ring.exponent(a), ring.exponent(b));
}

std::vector<VarId> b_variables(int count) {
    std::vector<VarId> vs;
    for (int i = 1; i <= count; ++i) vs.push_back(B(i));
    return vs;
}

Ideal::Ideal(std::vector<Poly> generators, MonomialOrder order)
    : order_(std::move(order)), cache_(std::make_shared<Cache>()) {
    Ring ring(order_);
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        (void)ring.from_poly(g);  // validates variables and exponents
        generators_.push_back(std::move(g));
    }
}

const std::vector<Poly>& Ideal::groebner_basis() const {
    std::call_once(cache_->once, [this] {
        Ring ring(order_);
        for (const auto& g : ring.buchberger(to_gpolys(ring, generators_))) cache_->basis.push_back(ring.to_poly(g));
    });
    return cache_->basis;
}

Poly Ideal::normal_form(const Poly& f) const { return reduce(f, groebner_basis(), order_); }

std::vector<Poly> groebner(const Ideal& ideal) { return ideal.groebner_basis(); }

Poly reduce(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
    Ring ring(order);
    return ring.to_poly(ring.reduce(ring.from_poly(f), to_gpolys(ring, basis)));
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw IdealError("s_polynomial of zero");
    Ring ring(order);
    return ring.to_poly(ring.spoly(ring.from_poly(f), ring.from_poly(g)));
}

bool s_pairs_reduce_to_zero(const std::vector<Poly>& basis, const MonomialOrder& order) {
    Ring ring(order);
    auto gs = to_gpolys(ring, basis);
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            if (!ring.reduce(ring.spoly(gs[i], gs[j]), gs).empty()) return false;
    return true;
}

Monomial leading_monomial(const Poly& f, const MonomialOrder& order) {
    if (f.is_zero()) throw IdealError("leading monomial of zero");
    Ring ring(order);
    return ring.monomial(ring.from_poly(f).front().e);
}

std::optional<Poly> exact_quotient(const Poly& f, const Poly& g, const MonomialOrder& order) {
    if (g.is_zero()) throw IdealError("division by zero polynomial");
    Ring ring(order);
    GPoly p = ring.from_poly(f);
    const GPoly d = ring.from_poly(g);
    GPoly q;
    while (!p.empty()) {
        if (!Ring::divides(d.front().e, p.front().e)) return std::nullopt;
        Rational c = p.front().c / d.front().c;
        Exp shift = Ring::quotient(p.front().e, d.front().e);
        q.push_back({shift, c});
        p = ring.sub_mul(p, c, shift, d);
    }
    return ring.to_poly(q);
}

bool member(const Poly& f, const Ideal& ideal) { return ideal.normal_form(f).is_zero(); }

bool radical_member(const Poly& f, const Ideal& ideal) {
    if (f.is_zero()) return true;
    VarId t = T(1);
    auto order = ideal.order().extended(t);
    std::vector<Poly> gens = ideal.generators();
    gens.push_back(Poly(1L) - Poly(t) * f);
    Ideal extended(std::move(gens), std::move(order));
    const auto& gb = extended.groebner_basis();
    return gb.size() == 1 && gb.front() == Poly(1L);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (a.order().vars != b.order().vars) throw IdealError("ideal_equal: different variable sets");
    auto contained = [](const Ideal& small, const Ideal& big) {
        return std::all_of(small.generators().begin(), small.generators().end(),
                           [&](const Poly& g) { return member(g, big); });
    };
    return contained(a, b) && contained(b, a);
}

int hilbert_dimension(const Ideal& ideal) {
    const int n = static_cast<int>(ideal.order().vars.size());
    const auto& gb = ideal.groebner_basis();
    if (gb.empty()) throw ZeroIdeal(n);
    if (gb.size() == 1 && gb.front().is_constant()) throw UnitIdeal();
    Ring ring(ideal.order());
    std::vector<unsigned long> supports;
    for (const auto& g : gb) {
        auto e = ring.exponent(leading_monomial(g, ideal.order()));
        unsigned long mask = 0;
        for (int k = 0; k < n; ++k)
            if (e[static_cast<std::size_t>(k)] != 0) mask |= 1UL << k;
        supports.push_back(mask);
    }
    if (n > 24) throw IdealError("hilbert_dimension: too many variables for subset enumeration");
    int best = 0;
    for (unsigned long s = 0; s < (1UL << n); ++s) {
        int size = __builtin_popcountl(s);
        if (size <= best) continue;
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [&](unsigned long m) { return (m & ~s) == 0; });
        if (independent) best = size;
    }
    return best;
}

nlohmann::json to_json(const Ideal& ideal) {
    nlohmann::json vars = nlohmann::json::array();
    for (auto v : ideal.order().vars) vars.push_back(v.name());
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
    return {{"variables", vars},
            {"order", ideal.order().kind == OrderKind::grevlex ? "grevlex" : "lex"},
            {"generators", gens}};
}

Ideal ideal_from_json(const nlohmann::json& j) {
    std::vector<VarId> vars;
    for (const auto& v : j.at("variables")) {
        Poly p = Poly::parse(v.get<std::string>());
        auto vs = p.variables();
        if (vs.size() != 1 || p != Poly(*vs.begin())) throw IdealError("ideal json: bad variable name");
        vars.push_back(*vs.begin());
    }
    auto kind = j.at("order").get<std::string>();
    if (kind != "grevlex" && kind != "lex") throw IdealError("ideal json: unknown order " + kind);
    std::vector<Poly> gens;
    for (const auto& g : j.at("generators")) gens.push_back(Poly::parse(g.get<std::string>()));
    return {std::move(gens), {kind == "grevlex" ? OrderKind::grevlex : OrderKind::lex, std::move(vars)}};
}

}  // namespace htk
