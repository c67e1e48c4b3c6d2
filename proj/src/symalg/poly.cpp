#include "htk/symalg.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace htk {

std::string to_string(const Rational& q) { return q.get_str(); }

char space_letter(Space s) {
    switch (s) {
        case Space::x: return 'x';
        case Space::p: return 'p';
        case Space::b: return 'b';
        case Space::a: return 'a';
        case Space::c: return 'c';
        case Space::t: return 't';
    }
    return '?';
}

std::string VarId::name() const { return space_letter(space) + std::to_string(index); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, int exponent) {
    if (exponent != 0) factors_.emplace_back(v, exponent);
    check_exponents();
}

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& l, const Factor& r) { return l.first < r.first; });
    for (const auto& [v, e] : factors) {
        if (!factors_.empty() && factors_.back().first == v) {
            factors_.back().second += e;
            if (factors_.back().second == 0) factors_.pop_back();
        } else if (e != 0) {
            factors_.emplace_back(v, e);
        }
    }
    check_exponents();
}

void Monomial::check_exponents() const {
    for (const auto& [v, e] : factors_)
        if (e < 0 && v.space != Space::x)
            throw SymalgError("negative exponent on non-position variable " + v.name());
}

int Monomial::degree(VarId v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

bool Monomial::has_negative_exponent() const {
    return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second < 0; });
}

bool Monomial::involves(const SpaceSet& spaces) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return spaces.contains(f.first.space); });
}

std::pair<Monomial, Monomial> Monomial::split(const SpaceSet& spaces) const {
    Monomial in, out;
    for (const auto& f : factors_) (spaces.contains(f.first.space) ? in : out).factors_.push_back(f);
    return {in, out};
}

Monomial Monomial::without(VarId v) const {
    Monomial m;
    for (const auto& f : factors_)
        if (f.first != v) m.factors_.push_back(f);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            r.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            r.factors_.push_back(*j++);
        } else {
            int e = i->second + j->second;
            if (e != 0) r.factors_.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first == j->first) {
            if (i->second != j->second) return i->second <=> j->second;
            ++i;
            ++j;
        } else if (i->first < j->first) {
            return i->second <=> 0;
        } else {
            return 0 <=> j->second;
        }
    }
    if (i != a.factors_.end()) return i->second <=> 0;
    if (j != b.factors_.end()) return 0 <=> j->second;
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += '*';
        s += v.name();
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly::Poly(VarId v, int exponent) : Poly(Monomial(v, exponent), Rational(1)) {}

Poly::Poly(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.emplace_back(m, c);
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.first > r.first; });
    Poly out;
    out.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first) {
            out.terms_.back().second += t.second;
        } else {
            if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
            out.terms_.push_back(std::move(t));
        }
    }
    if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
    return out;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rational Poly::constant_term() const { return coefficient(Monomial{}); }

Rational Poly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first > key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

std::set<VarId> Poly::variables() const {
    std::set<VarId> vs;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors()) vs.insert(f.first);
    return vs;
}

int Poly::degree(VarId v) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        int e = t.first.degree(v);
        d = first ? e : std::max(d, e);
        first = false;
    }
    return d;
}

int Poly::min_degree(VarId v) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        int e = t.first.degree(v);
        d = first ? e : std::min(d, e);
        first = false;
    }
    return d;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.total_degree(); }

bool Poly::has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.has_negative_exponent(); });
}

bool Poly::involves(const SpaceSet& spaces) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.involves(spaces); });
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
    std::vector<Poly::Term> r;
    r.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        auto c = i->first <=> j->first;
        if (c > 0) {
            r.push_back(*i++);
        } else if (c < 0) {
            r.emplace_back(j->first, Subtract ? Rational(-j->second) : j->second);
            ++j;
        } else {
            Rational s = Subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
            if (s != 0) r.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    r.insert(r.end(), i, a.end());
    for (; j != b.end(); ++j) r.emplace_back(j->first, Subtract ? Rational(-j->second) : j->second);
    return r;
}

}  // namespace

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.is_zero()) return *this;
    terms_ = merge<false>(terms_, rhs.terms_);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.is_zero()) return *this;
    terms_ = merge<true>(terms_, rhs.terms_);
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.second *= c;
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a * b.terms_[0].second;
    if (a.is_constant()) return b * a.terms_[0].second;
    std::vector<Poly::Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
    return Poly::from_terms(std::move(prod));
}

Poly operator-(Poly a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
}

Rational Poly::evaluate(const Assignment& values) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end()) throw SymalgError("evaluate: unbound variable " + v.name());
            if (e < 0 && it->second == 0) throw SymalgError("evaluate: pole at " + v.name() + " = 0");
            Rational base = e < 0 ? Rational(1 / it->second) : it->second;
            Rational powv = 1;
            for (int k = 0; k < std::abs(e); ++k) powv *= base;
            term *= powv;
        }
        sum += term;
    }
    return sum;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += mag.get_str();
        } else {
            if (mag != 1) s += mag.get_str() + '*';
            s += m.to_string();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }
std::ostream& operator<<(std::ostream& os, VarId v) { return os << v.name(); }

// ---------------------------------------------------------------- operations

Poly pow(const Poly& base, unsigned exponent) {
    Poly result(1L);
    Poly sq = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= sq;
        exponent >>= 1U;
        if (exponent != 0) sq = sq * sq;
    }
    return result;
}

Poly differentiate(const Poly& f, VarId v) {
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : f.terms()) {
        int e = m.degree(v);
        if (e == 0) continue;
        std::vector<Monomial::Factor> fs = m.factors();
        for (auto& fac : fs)
            if (fac.first == v) fac.second -= 1;
        out.emplace_back(Monomial(std::move(fs)), c * e);
    }
    return Poly::from_terms(std::move(out));
}

Poly laurent_integrate(const Poly& f, VarId v) {
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : f.terms()) {
        int e = m.degree(v);
        if (e == -1) throw LogarithmicTerm("integrating " + m.to_string() + " in " + v.name() + " needs a logarithm");
        out.emplace_back(m * Monomial(v, 1), Rational(c / (e + 1)));
    }
    return Poly::from_terms(std::move(out));
}

Poly substitute(const Poly& f, const Bindings& bindings) {
    if (bindings.empty()) return f;
    // Powers of bound images are reused across terms.
    std::map<std::pair<VarId, int>, Poly> power_cache;
    auto power_of = [&](VarId v, int e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        const Poly& img = bindings.at(v);
        Poly value;
        if (e >= 0) {
            value = pow(img, static_cast<unsigned>(e));
        } else {
            if (img.size() != 1)
                throw NonInvertibleSubstitution("variable " + v.name() + " has a negative exponent and is bound to " +
                                                img.to_string());
            const auto& [m, c] = img.terms()[0];
            std::vector<Monomial::Factor> inv;
            for (const auto& [w, k] : m.factors()) inv.emplace_back(w, -k);
            value = pow(Poly(Monomial(std::move(inv)), Rational(1 / c)), static_cast<unsigned>(-e));
        }
        return power_cache.emplace(key, std::move(value)).first->second;
    };

    Poly result;
    std::vector<Poly::Term> untouched;
    for (const auto& [m, c] : f.terms()) {
        std::vector<Monomial::Factor> rest;
        std::vector<Monomial::Factor> bound;
        for (const auto& fac : m.factors()) (bindings.contains(fac.first) ? bound : rest).push_back(fac);
        if (bound.empty()) {
            untouched.emplace_back(m, c);
            continue;
        }
        Poly term(Monomial(std::move(rest)), c);
        for (const auto& [v, e] : bound) term *= power_of(v, e);
        result += term;
    }
    return result + Poly::from_terms(std::move(untouched));
}

Poly substitute(const Poly& f, const Assignment& values) {
    std::vector<Poly::Term> out;
    out.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        Rational coeff = c;
        std::vector<Monomial::Factor> rest;
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end()) {
                rest.emplace_back(v, e);
                continue;
            }
            if (e < 0 && it->second == 0) throw SymalgError("substitute: pole at " + v.name() + " = 0");
            Rational base = e < 0 ? Rational(1 / it->second) : it->second;
            for (int k = 0; k < std::abs(e); ++k) coeff *= base;
        }
        out.emplace_back(Monomial(std::move(rest)), std::move(coeff));
    }
    return Poly::from_terms(std::move(out));
}

std::map<Monomial, Poly> collect(const Poly& f, const SpaceSet& on) {
    std::map<Monomial, std::vector<Poly::Term>> groups;
    for (const auto& [m, c] : f.terms()) {
        auto [key, rest] = m.split(on);
        groups[key].emplace_back(rest, c);
    }
    std::map<Monomial, Poly> out;
    for (auto& [k, ts] : groups) out.emplace(k, Poly::from_terms(std::move(ts)));
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    Poly parse() {
        if (s_.empty()) fail("empty input");
        Poly result;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            result += parse_term() * Rational(sign);
            first = false;
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("poly parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    Integer parse_integer() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(s_.substr(start, pos_ - start));
    }

    Poly parse_term() {
        Rational coeff = 1;
        std::vector<Monomial::Factor> factors;
        bool any = false;
        while (true) {
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Rational q(parse_integer());
                if (peek() == '/') {
                    ++pos_;
                    Integer den = parse_integer();
                    if (den == 0) fail("zero denominator");
                    q /= Rational(den);
                }
                coeff *= q;
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                VarId v = parse_variable();
                factors.emplace_back(v, parse_exponent());
            } else {
                fail("expected a coefficient or a variable");
            }
            any = true;
            if (peek() != '*') break;
            ++pos_;
        }
        if (!any) fail("empty term");
        try {
            return Poly(Monomial(std::move(factors)), coeff);
        } catch (const SymalgError& e) {
            fail(e.what());
        }
    }

    VarId parse_variable() {
        char letter = get();
        Space sp;
        switch (letter) {
            case 'x': sp = Space::x; break;
            case 'p': sp = Space::p; break;
            case 'b': sp = Space::b; break;
            case 'a': sp = Space::a; break;
            case 'c': sp = Space::c; break;
            case 't': sp = Space::t; break;
            default: --pos_; fail(std::string("unknown variable namespace '") + letter + "'");
        }
        Integer idx = parse_integer();
        if (idx > 65535) fail("variable index too large");
        return {sp, static_cast<int>(idx.get_si())};
    }

    int parse_exponent() {
        if (peek() != '^') return 1;
        ++pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        Integer e = parse_integer();
        if (neg && e == 0) fail("exponent -0 is not allowed");
        if (e > 100000) fail("exponent too large");
        return static_cast<int>(neg ? -e.get_si() : e.get_si());
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace htk
