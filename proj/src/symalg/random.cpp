#include "htk/random.hpp"

namespace htk {

int RandomPolys::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational RandomPolys::coefficient() {
    int num = integer(1, 9);
    if (integer(0, 1) == 1) num = -num;
    Rational q(num, integer(1, 4));
    q.canonicalize();
    return q;
}

Poly RandomPolys::poly(const std::vector<VarId>& vars, int max_degree, int max_terms, int min_exp) {
    Poly out;
    const int terms = integer(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Factor> fs;
        int budget = integer(0, max_degree);
        for (auto v : vars) {
            const int lo = v.space == Space::x ? min_exp : 0;
            int e = integer(lo, std::max(lo, budget));
            if (e > 0) budget -= e;
            if (e != 0) fs.emplace_back(v, e);
        }
        out += Poly(Monomial(std::move(fs)), coefficient());
    }
    return out;
}

TensorField RandomPolys::operator_field(int dim, int max_degree, int max_terms) {
    TensorField a(dim, {Slot::up, Slot::down});
    const auto xs = position_variables(dim);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (integer(0, 3) != 0) a.flat(k) = poly(xs, max_degree, max_terms);
    return a;
}

std::vector<VarId> position_variables(int dim) {
    std::vector<VarId> vs;
    for (int i = 1; i <= dim; ++i) vs.push_back(X(i));
    return vs;
}

std::vector<VarId> momentum_variables(int dim) {
    std::vector<VarId> vs;
    for (int i = 1; i <= dim; ++i) vs.push_back(P(i));
    return vs;
}

}  // namespace htk
