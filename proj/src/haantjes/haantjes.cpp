#include "htk/haantjes.hpp"

namespace htk {

OperatorField::OperatorField(TensorField a) : a_(std::move(a)) {
    if (a_.slots() != std::vector<Slot>{Slot::up, Slot::down})
        throw TensorError("operator field must have valence (1,1) with slots (up, down)");
}

OperatorField OperatorField::from_covariant(const TensorField& k, const Metric& g) {
    if (k.slots() != std::vector<Slot>{Slot::down, Slot::down})
        throw TensorError("from_covariant: expected a (0,2) tensor");
    return OperatorField(raise_lower(k, 0, Slot::up, g));
}

TensorField nijenhuis(const OperatorField& a) {
    const int n = a.dim();
    const TensorField da = partial_derivative(a.tensor());  // da[i,k,a] = d_a A^i_k
    TensorField out(n, {Slot::up, Slot::down, Slot::down});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                Poly sum;
                for (int m = 0; m < n; ++m) {
                    sum += da.at({i, k, m}) * a(m, j);
                    sum -= da.at({i, j, m}) * a(m, k);
                    sum += (da.at({m, j, k}) - da.at({m, k, j})) * a(i, m);
                }
                out.at({i, k, j}) = -sum;
                out.at({i, j, k}) = std::move(sum);
            }
        }
    }
    return out;
}

TensorField haantjes_from_nijenhuis(const OperatorField& a, const TensorField& nij) {
    const int n = a.dim();
    // a2 = A^i_a A^a_b
    TensorField a2(n, {Slot::up, Slot::down});
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < n; ++b) {
            Poly s;
            for (int m = 0; m < n; ++m) s += a(i, m) * a(m, b);
            a2.at({i, b}) = std::move(s);
        }
    // left[i,j,b] = N^i_ab A^a_j
    TensorField left(n, {Slot::up, Slot::down, Slot::down});
    // right[a,j,k] = N^a_bk A^b_j + N^a_jb A^b_k
    TensorField right(n, {Slot::up, Slot::down, Slot::down});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Poly l, r;
                for (int m = 0; m < n; ++m) {
                    l += nij.at({i, m, k}) * a(m, j);
                    r += nij.at({i, m, k}) * a(m, j) + nij.at({i, j, m}) * a(m, k);
                }
                left.at({i, j, k}) = std::move(l);
                right.at({i, j, k}) = std::move(r);
            }

    TensorField out(n, {Slot::up, Slot::down, Slot::down});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Poly s;
                for (int m = 0; m < n; ++m) {
                    s += nij.at({m, j, k}) * a2.at({i, m});
                    s += left.at({i, j, m}) * a(m, k);
                    s -= a(i, m) * right.at({m, j, k});
                }
                out.at({i, k, j}) = -s;
                out.at({i, j, k}) = std::move(s);
            }
    return out;
}

TensorField haantjes(const OperatorField& a) { return haantjes_from_nijenhuis(a, nijenhuis(a)); }

ConservationResidual conservation_check(const OperatorField& a, const Poly& u) {
    const int n = a.dim();
    std::vector<Poly> grad;
    for (int m = 0; m < n; ++m) grad.push_back(differentiate(u, X(m + 1)));
    // form_k = A^a_k u_,a
    std::vector<Poly> form;
    for (int k = 0; k < n; ++k) {
        Poly s;
        for (int m = 0; m < n; ++m) s += a(m, k) * grad[static_cast<std::size_t>(m)];
        form.push_back(std::move(s));
    }
    TensorField res(n, {Slot::down, Slot::down});
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Poly r = differentiate(form[static_cast<std::size_t>(k)], X(j + 1)) -
                     differentiate(form[static_cast<std::size_t>(j)], X(k + 1));
            res.at({k, j}) = -r;
            res.at({j, k}) = std::move(r);
        }
    return {u, std::move(res)};
}

std::optional<TorsionWitness> first_nonzero(const TensorField& t) {
    for (std::size_t k = 0; k < t.size(); ++k)
        if (!t.flat(k).is_zero()) return TorsionWitness{t.unravel(k), t.flat(k)};
    return std::nullopt;
}

HaantjesZeroResult is_haantjes_zero(const OperatorField& a) {
    auto w = first_nonzero(haantjes(a));
    return {!w.has_value(), std::move(w)};
}

}  // namespace htk
