#include "htk/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace htk {

Metric::Metric(int dim) : Metric(dim, std::vector<int>(static_cast<std::size_t>(dim), 1)) {}

Metric::Metric(int dim, std::vector<int> signature) : signature_(std::move(signature)) {
    if (dim < 1 || static_cast<int>(signature_.size()) != dim) throw TensorError("metric: signature length mismatch");
    for (int s : signature_)
        if (s != 1 && s != -1) throw TensorError("metric: signature entries must be +1 or -1");
}

bool Metric::is_euclidean() const {
    return std::all_of(signature_.begin(), signature_.end(), [](int s) { return s == 1; });
}

namespace {

std::size_t ipow(int n, int k) {
    std::size_t r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
    return r;
}

std::size_t flat_offset(int dim, std::size_t rank, std::span<const int> idx) {
    if (idx.size() != rank) throw TensorError("index has wrong rank");
    std::size_t off = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim) throw TensorError("index out of range");
        off = off * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
    }
    return off;
}

}  // namespace

TensorField::TensorField(int dim, std::vector<Slot> slots)
    : dim_(dim), slots_(std::move(slots)), components_(ipow(dim, static_cast<int>(slots_.size()))) {
    if (dim < 1) throw TensorError("tensor dimension must be positive");
}

TensorField TensorField::from_matrix(const std::vector<std::vector<Poly>>& rows, std::vector<Slot> slots) {
    const int n = static_cast<int>(rows.size());
    if (slots.size() != 2) throw TensorError("from_matrix needs two slots");
    TensorField t(n, std::move(slots));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw TensorError("matrix is not square");
        for (int j = 0; j < n; ++j) t.at({i, j}) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return t;
}

TensorField TensorField::scalar(int dim, Poly value) {
    TensorField t(dim, {});
    t.components_[0] = std::move(value);
    return t;
}

TensorField TensorField::one_form(std::vector<Poly> components) {
    TensorField t(static_cast<int>(components.size()), {Slot::down});
    t.components_ = std::move(components);
    return t;
}

TensorField TensorField::identity_operator(int dim) {
    TensorField t(dim, {Slot::up, Slot::down});
    for (int i = 0; i < dim; ++i) t.at({i, i}) = Poly(1L);
    return t;
}

std::pair<int, int> TensorField::valence() const {
    int up = static_cast<int>(std::count(slots_.begin(), slots_.end(), Slot::up));
    return {up, rank() - up};
}

std::size_t TensorField::offset(std::span<const int> idx) const { return flat_offset(dim_, slots_.size(), idx); }

Index TensorField::unravel(std::size_t off) const {
    Index idx(slots_.size());
    for (std::size_t k = slots_.size(); k-- > 0;) {
        idx[k] = static_cast<int>(off % static_cast<std::size_t>(dim_));
        off /= static_cast<std::size_t>(dim_);
    }
    return idx;
}

bool TensorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Poly& p) { return p.is_zero(); });
}

TensorField& TensorField::operator+=(const TensorField& rhs) {
    if (dim_ != rhs.dim_ || slots_ != rhs.slots_) throw TensorError("tensor sum: shape mismatch");
    for (std::size_t k = 0; k < components_.size(); ++k) components_[k] += rhs.components_[k];
    return *this;
}

TensorField& TensorField::operator-=(const TensorField& rhs) {
    if (dim_ != rhs.dim_ || slots_ != rhs.slots_) throw TensorError("tensor difference: shape mismatch");
    for (std::size_t k = 0; k < components_.size(); ++k) components_[k] -= rhs.components_[k];
    return *this;
}

TensorField& TensorField::operator*=(const Poly& s) {
    for (auto& c : components_) c *= s;
    return *this;
}

TensorField partial_derivative(const TensorField& t) {
    auto slots = t.slots();
    slots.push_back(Slot::down);
    TensorField out(t.dim(), std::move(slots));
    const auto n = static_cast<std::size_t>(t.dim());
    for (std::size_t k = 0; k < t.size(); ++k)
        for (std::size_t d = 0; d < n; ++d) out.flat(k * n + d) = differentiate(t.flat(k), X(static_cast<int>(d) + 1));
    return out;
}

TensorField raise_lower(const TensorField& t, int slot, Slot direction, const Metric& g) {
    if (slot < 0 || slot >= t.rank()) throw TensorError("raise_lower: slot out of range");
    if (g.dim() != t.dim()) throw TensorError("raise_lower: metric dimension mismatch");
    auto slots = t.slots();
    if (slots[static_cast<std::size_t>(slot)] == direction) return t;
    slots[static_cast<std::size_t>(slot)] = direction;
    // Diagonal metric of +-1 entries is its own inverse.
    TensorField out(t.dim(), std::move(slots));
    for (std::size_t k = 0; k < t.size(); ++k) {
        auto idx = t.unravel(k);
        int s = g.sign(idx[static_cast<std::size_t>(slot)]);
        out.flat(k) = s == 1 ? t.flat(k) : -t.flat(k);
    }
    return out;
}

TensorField contract(const TensorField& t, int slot_a, int slot_b) {
    if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= t.rank() || slot_b >= t.rank())
        throw TensorError("contract: invalid slot pair");
    if (t.slots()[static_cast<std::size_t>(slot_a)] == t.slots()[static_cast<std::size_t>(slot_b)])
        throw SlotKindMismatch("contract: slots must be one contravariant and one covariant");
    std::vector<Slot> slots;
    std::vector<int> kept;
    for (int s = 0; s < t.rank(); ++s) {
        if (s == slot_a || s == slot_b) continue;
        slots.push_back(t.slots()[static_cast<std::size_t>(s)]);
        kept.push_back(s);
    }
    TensorField out(t.dim(), std::move(slots));
    Index full(static_cast<std::size_t>(t.rank()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        auto idx = out.unravel(k);
        for (std::size_t m = 0; m < kept.size(); ++m) full[static_cast<std::size_t>(kept[m])] = idx[m];
        Poly sum;
        for (int a = 0; a < t.dim(); ++a) {
            full[static_cast<std::size_t>(slot_a)] = a;
            full[static_cast<std::size_t>(slot_b)] = a;
            sum += t[full];
        }
        out.flat(k) = std::move(sum);
    }
    return out;
}

TensorField outer(const TensorField& a, const TensorField& b) {
    if (a.dim() != b.dim()) throw TensorError("outer: dimension mismatch");
    auto slots = a.slots();
    slots.insert(slots.end(), b.slots().begin(), b.slots().end());
    TensorField out(a.dim(), std::move(slots));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out.flat(i * b.size() + j) = a.flat(i) * b.flat(j);
    return out;
}

TensorField sym_antisym(const TensorField& t, const std::vector<int>& slots, SymMode mode) {
    if (slots.empty()) return t;
    for (int s : slots)
        if (s < 0 || s >= t.rank()) throw TensorError("sym_antisym: slot out of range");
    const Slot kind = t.slots()[static_cast<std::size_t>(slots.front())];
    for (int s : slots)
        if (t.slots()[static_cast<std::size_t>(s)] != kind)
            throw SlotKindMismatch("sym_antisym: slots must all be of the same kind");

    std::vector<int> perm(slots.size());
    std::iota(perm.begin(), perm.end(), 0);
    TensorField out(t.dim(), t.slots());
    Rational count = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Rational weight = (mode == SymMode::antisym && sign < 0) ? -1 : 1;
        for (std::size_t k = 0; k < t.size(); ++k) {
            auto idx = t.unravel(k);
            auto src = idx;
            for (std::size_t i = 0; i < slots.size(); ++i)
                src[static_cast<std::size_t>(slots[i])] = idx[static_cast<std::size_t>(slots[static_cast<std::size_t>(perm[i])])];
            out.flat(k) += t[src] * weight;
        }
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational inv = 1 / count;
    return out * Poly(inv);
}

TensorField hessian_operator(const Poly& f, int dim) {
    if (f.has_negative_exponent()) throw TensorError("hessian_operator: f must be a polynomial");
    TensorField out(dim, {Slot::up, Slot::down});
    for (int i = 0; i < dim; ++i) {
        Poly fi = differentiate(f, X(i + 1));
        for (int j = 0; j < dim; ++j) out.at({i, j}) = differentiate(fi, X(j + 1));
    }
    return out;
}

TensorField killing_residual(const TensorField& k) {
    if (k.slots() != std::vector<Slot>{Slot::down, Slot::down})
        throw TensorError("killing_residual: expected a (0,2) tensor");
    return sym_antisym(partial_derivative(k), {0, 1, 2}, SymMode::sym);
}

TensorField transpose(const TensorField& t) {
    if (t.rank() != 2) throw TensorError("transpose: rank must be 2");
    TensorField out(t.dim(), {t.slots()[1], t.slots()[0]});
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) out.at({i, j}) = t.at({j, i});
    return out;
}

std::size_t TensorValue::offset(std::span<const int> idx) const { return flat_offset(dim, slots.size(), idx); }

bool TensorValue::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Rational& q) { return q == 0; });
}

Assignment position_assignment(std::span<const Rational> point) {
    Assignment a;
    for (std::size_t i = 0; i < point.size(); ++i) a.emplace(X(static_cast<int>(i) + 1), point[i]);
    return a;
}

TensorValue evaluate(const TensorField& t, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != t.dim()) throw TensorError("evaluate: point dimension mismatch");
    auto values = position_assignment(point);
    TensorValue v{t.dim(), t.slots(), {}};
    v.data.reserve(t.size());
    for (const auto& c : t.components()) v.data.push_back(c.evaluate(values));
    return v;
}

nlohmann::json to_json(const TensorField& t) {
    nlohmann::json slots = nlohmann::json::array();
    for (Slot s : t.slots()) slots.push_back(s == Slot::up ? "up" : "down");
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : t.components()) comps.push_back(c.to_string());
    return {{"dim", t.dim()}, {"slots", slots}, {"components", comps}};
}

TensorField tensor_from_json(const nlohmann::json& j) {
    std::vector<Slot> slots;
    for (const auto& s : j.at("slots")) {
        auto name = s.get<std::string>();
        if (name != "up" && name != "down") throw TensorError("tensor json: bad slot kind " + name);
        slots.push_back(name == "up" ? Slot::up : Slot::down);
    }
    TensorField t(j.at("dim").get<int>(), std::move(slots));
    const auto& comps = j.at("components");
    if (comps.size() != t.size()) throw TensorError("tensor json: wrong component count");
    for (std::size_t k = 0; k < t.size(); ++k) t.flat(k) = Poly::parse(comps[k].get<std::string>());
    return t;
}

std::string index_label(std::span<const int> idx) {
    std::string s;
    for (int i : idx) s += std::to_string(i + 1);
    return s;
}

}  // namespace htk
