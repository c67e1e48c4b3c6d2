#pragma once

// Killing tensors of valence two on flat space, their symmetric-product
// construction, and Bertrand-Darboux compatible subfamilies for a potential.

#include <optional>
#include <string>

#include "htk/tensor.hpp"

namespace htk {

class KillingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedDimension : public KillingError {
public:
    using KillingError::KillingError;
};

class EmptyFamily : public KillingError {
public:
    using KillingError::KillingError;
};

struct KillingBasis {
    int dim = 0;
    std::vector<TensorField> elements;  // symmetric (0,2), degree <= 2 in x
};

/// K = sum_i b_i basis[i]. Components are linear in the parameters.
class KillingFamily {
public:
    KillingFamily(int dim, std::vector<VarId> params, std::vector<TensorField> basis);

    int dim() const { return dim_; }
    std::size_t parameter_count() const { return params_.size(); }
    const std::vector<VarId>& params() const { return params_; }
    /// Coefficient tensor of params()[i].
    const std::vector<TensorField>& basis() const { return basis_; }
    /// The symbolic family as one (0,2) tensor in x and b.
    const TensorField& components() const { return components_; }

private:
    int dim_;
    std::vector<VarId> params_;
    std::vector<TensorField> basis_;
    TensorField components_;
};

struct PotentialTerm {
    Poly generator;    // u^(r)
    VarId coefficient; // symbol multiplying u^(r) in the potential
};

/// Named potential with optional reference parametrization of its compatible
/// family, used to relabel the computed family onto fixed b-labels.
struct PotentialSpec {
    std::string name;
    std::string description;
    int dim = 0;
    std::vector<PotentialTerm> terms;
    std::optional<TensorField> reference_family;  // (0,2) in x and b1..bm
    /// Parameter restriction defining a subfamily (e.g. b4 = b6 = 0).
    std::map<VarId, Poly> restriction;
    /// Expected generator of the radical of the Haantjes-zero ideal, when the
    /// ideal is nonzero.
    std::optional<Poly> radical_generator;

    std::vector<Poly> generators() const;
    /// sum of coefficient * generator
    Poly potential() const;
};

/// Full space of valence-2 Killing tensors, from an exact linear solve on the
/// degree <= 2 ansatz. Basis vectors come from the reduced echelon form with
/// unknowns ordered by component (i <= j, row-major) then by monomial.
KillingBasis killing_space(int dim);

/// Translations dx_i followed by rotations x_i dx_j - x_j dx_i (i < j).
std::vector<TensorField> flat_killing_vectors(int dim);

/// (v (x) w + w (x) v) / 2 for one-forms v, w.
TensorField symmetric_product(const TensorField& v, const TensorField& w);

/// Maximal subfamily of span(basis) compatible with every generator of the
/// potential. Parameters are b1..bm; when the potential carries a reference
/// family spanning the same space, its parametrization is used.
KillingFamily compatible_family(const KillingBasis& basis, const PotentialSpec& pot);

/// Substitutes parameter values; unbound parameters stay symbolic.
TensorField specialize(const KillingFamily& family, const Bindings& values);

/// Family obtained by applying a parameter restriction (bound parameters are
/// dropped, remaining ones keep their labels).
KillingFamily restrict_family(const KillingFamily& family, const Bindings& restriction);

/// Coefficient tensors of a (0,2) tensor linear in the given parameters.
std::vector<TensorField> parameter_coefficients(const TensorField& t, const std::vector<VarId>& params);

/// True when the spans of two tensor lists coincide.
bool same_span(const std::vector<TensorField>& a, const std::vector<TensorField>& b);
std::size_t span_rank(const std::vector<TensorField>& ts);

namespace catalog {

/// Keys: sw1, oscillator, oo, iv, nonmaximal-3d.
const std::vector<std::string>& names();
PotentialSpec get(const std::string& name);
nlohmann::json to_json();

/// 3x3 symmetric matrix literal helper.
TensorField symmetric_matrix(const std::vector<std::vector<std::string>>& rows);

}  // namespace catalog

}  // namespace htk
