#pragma once

// Dense symbolic tensor fields on flat R^n in Cartesian coordinates.
//
// Components are stored row-major over the slot list, slot 0 most
// significant. Indices are 0-based in the C++ API; text and JSON output use
// 1-based labels.

#include <initializer_list>
#include <span>
#include <vector>

#include <json.hpp>

#include "htk/symalg.hpp"

namespace htk {

enum class Slot : std::uint8_t { up, down };

class TensorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SlotKindMismatch : public TensorError {
public:
    using TensorError::TensorError;
};

/// Constant diagonal metric with entries +-1.
class Metric {
public:
    explicit Metric(int dim);
    Metric(int dim, std::vector<int> signature);

    static Metric euclidean(int dim) { return Metric(dim); }

    int dim() const { return static_cast<int>(signature_.size()); }
    int sign(int i) const { return signature_[static_cast<std::size_t>(i)]; }
    bool is_euclidean() const;

private:
    std::vector<int> signature_;
};

using Index = std::vector<int>;

class TensorField {
public:
    TensorField() = default;
    TensorField(int dim, std::vector<Slot> slots);

    /// (0,2) or (1,1) tensor from an n x n matrix of components.
    static TensorField from_matrix(const std::vector<std::vector<Poly>>& rows, std::vector<Slot> slots);
    static TensorField scalar(int dim, Poly value);
    /// Covariant one-form with the given components.
    static TensorField one_form(std::vector<Poly> components);
    static TensorField identity_operator(int dim);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(slots_.size()); }
    const std::vector<Slot>& slots() const { return slots_; }
    /// (contravariant count, covariant count)
    std::pair<int, int> valence() const;

    std::size_t size() const { return components_.size(); }
    const std::vector<Poly>& components() const { return components_; }

    std::size_t offset(std::span<const int> idx) const;
    Index unravel(std::size_t offset) const;

    const Poly& operator[](std::span<const int> idx) const { return components_[offset(idx)]; }
    Poly& operator[](std::span<const int> idx) { return components_[offset(idx)]; }
    const Poly& at(std::initializer_list<int> idx) const { return (*this)[std::span(idx.begin(), idx.size())]; }
    Poly& at(std::initializer_list<int> idx) { return (*this)[std::span(idx.begin(), idx.size())]; }
    const Poly& flat(std::size_t k) const { return components_[k]; }
    Poly& flat(std::size_t k) { return components_[k]; }

    bool is_zero() const;

    TensorField& operator+=(const TensorField& rhs);
    TensorField& operator-=(const TensorField& rhs);
    TensorField& operator*=(const Poly& s);
    friend TensorField operator+(TensorField a, const TensorField& b) { return a += b; }
    friend TensorField operator-(TensorField a, const TensorField& b) { return a -= b; }
    friend TensorField operator*(TensorField a, const Poly& s) { return a *= s; }
    friend TensorField operator*(const Poly& s, TensorField a) { return a *= s; }
    friend bool operator==(const TensorField&, const TensorField&) = default;

    /// Applies f to every component.
    template <class F>
    TensorField map(F&& f) const {
        TensorField out(dim_, slots_);
        for (std::size_t k = 0; k < components_.size(); ++k) out.components_[k] = f(components_[k]);
        return out;
    }

private:
    int dim_ = 0;
    std::vector<Slot> slots_;
    std::vector<Poly> components_;
};

/// Appends a covariant derivative slot; flat space, so this is the partial.
TensorField partial_derivative(const TensorField& t);
TensorField raise_lower(const TensorField& t, int slot, Slot direction, const Metric& g);
/// Trace over one contravariant and one covariant slot.
TensorField contract(const TensorField& t, int slot_a, int slot_b);
/// Tensor product; slots of `a` come first.
TensorField outer(const TensorField& a, const TensorField& b);

enum class SymMode : std::uint8_t { sym, antisym };

/// (Anti)symmetrization over the given slots with 1/k! normalization.
TensorField sym_antisym(const TensorField& t, const std::vector<int>& slots, SymMode mode);

/// Operator field with components d^2 f / dx_i dx_j.
TensorField hessian_operator(const Poly& f, int dim);

/// Killing-equation residual: the (0,3) tensor of the derivative of a
/// symmetric (0,2) field, symmetrized over all three slots.
TensorField killing_residual(const TensorField& k);

TensorField transpose(const TensorField& t);

/// Values of a tensor field at a rational point.
struct TensorValue {
    int dim = 0;
    std::vector<Slot> slots;
    std::vector<Rational> data;

    std::size_t offset(std::span<const int> idx) const;
    const Rational& at(std::initializer_list<int> idx) const { return data[offset(std::span(idx.begin(), idx.size()))]; }
    Rational& at(std::initializer_list<int> idx) { return data[offset(std::span(idx.begin(), idx.size()))]; }
    bool is_zero() const;
    friend bool operator==(const TensorValue&, const TensorValue&) = default;
};

/// Point of R^n as x-namespace assignment x_{i+1} = point[i].
Assignment position_assignment(std::span<const Rational> point);

TensorValue evaluate(const TensorField& t, std::span<const Rational> point);

nlohmann::json to_json(const TensorField& t);
TensorField tensor_from_json(const nlohmann::json& j);

std::string index_label(std::span<const int> idx);

}  // namespace htk
