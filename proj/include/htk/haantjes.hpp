#pragma once

// Nijenhuis and Haantjes torsions of operator fields, and the conservation-law
// residual d(A* du).

#include <optional>

#include "htk/tensor.hpp"

namespace htk {

/// A (1,1) tensor field A^i_j, stored with slots (up, down).
class OperatorField {
public:
    explicit OperatorField(TensorField a);

    /// Raises the first slot of a (0,2) field with the given metric.
    static OperatorField from_covariant(const TensorField& k, const Metric& g);
    static OperatorField from_covariant(const TensorField& k) {
        return from_covariant(k, Metric::euclidean(k.dim()));
    }

    int dim() const { return a_.dim(); }
    const TensorField& tensor() const { return a_; }
    const Poly& operator()(int i, int j) const { return a_.at({i, j}); }

private:
    TensorField a_;
};

/// N^i_jk = d_a A^i_k A^a_j - d_a A^i_j A^a_k + (d_k A^a_j - d_j A^a_k) A^i_a,
/// returned as a tensor with slots (up, down, down).
TensorField nijenhuis(const OperatorField& a);

/// H^i_jk = N^b_jk A^i_a A^a_b + N^i_ab A^a_j A^b_k
///          - A^i_a (N^a_bk A^b_j + N^a_jb A^b_k).
TensorField haantjes(const OperatorField& a);
TensorField haantjes_from_nijenhuis(const OperatorField& a, const TensorField& n);

struct ConservationResidual {
    Poly generator;
    /// residual_jk = d_j (A^a_k u_,a) - d_k (A^a_j u_,a); slots (down, down).
    TensorField residual;

    bool is_conservation_law() const { return residual.is_zero(); }
};

ConservationResidual conservation_check(const OperatorField& a, const Poly& u);

struct TorsionWitness {
    Index index;  // (i, j, k), 0-based
    Poly value;
};

struct HaantjesZeroResult {
    bool zero = true;
    std::optional<TorsionWitness> witness;
};

HaantjesZeroResult is_haantjes_zero(const OperatorField& a);
/// First nonzero component in row-major order, if any.
std::optional<TorsionWitness> first_nonzero(const TensorField& t);

}  // namespace htk
