#pragma once

// Phase-space layer: Poisson brackets, quadratic integrals built from
// compatible Killing tensors, functional independence, the structural tensor
// of an abundant family and the Haantjes tensor assembled from it, and the
// integrability identity K_{m[k,n]l} = -1/3 K^{pq} K_{p[l,m]} K_{q[k,n]}.

#include <random>

#include "htk/killing.hpp"
#include "htk/linalg.hpp"

namespace htk {

class MechanicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotCompatible : public MechanicsError {
public:
    using MechanicsError::MechanicsError;
};

class NonUniqueSolution : public MechanicsError {
public:
    using MechanicsError::MechanicsError;
};

class Inconsistent : public MechanicsError {
public:
    using MechanicsError::MechanicsError;
};

class DegenerateK : public MechanicsError {
public:
    using MechanicsError::MechanicsError;
};

/// A function on T*R^n: Laurent in x, polynomial in p, polynomial in any
/// parameter namespace.
class PhaseFunction {
public:
    PhaseFunction(int dim, Poly f);

    int dim() const { return dim_; }
    const Poly& poly() const { return f_; }
    std::string to_string() const { return f_.to_string(); }

    friend bool operator==(const PhaseFunction&, const PhaseFunction&) = default;

private:
    int dim_;
    Poly f_;
};

/// {f, g} = sum_k df/dp_k dg/dx_k - df/dx_k dg/dp_k
PhaseFunction poisson(const PhaseFunction& f, const PhaseFunction& g);

/// H = sum_k p_k^2 + V
PhaseFunction hamiltonian(int dim, const Poly& potential);

/// F = K^{ij} p_i p_j + W with dW = K*dV and V = pot.potential() after
/// substituting `coefficients` (unbound coefficients stay symbolic).
PhaseFunction build_integral(const TensorField& k, const PotentialSpec& pot, const Bindings& coefficients = {});

/// The one-form K*dV; its exterior derivative vanishes for compatible K.
TensorField dual_differential(const TensorField& k, const Poly& v);

/// Random rational values with |num| <= 20 and den <= 7, never zero.
class SamplePoints {
public:
    explicit SamplePoints(std::uint64_t seed) : rng_(seed) {}
    Rational value();
    std::vector<Rational> point(int dim);

private:
    std::mt19937_64 rng_;
};

struct IndependenceResult {
    int rank = 0;
    /// Rank observed at every trial point.
    std::vector<int> trial_ranks;
    bool stable() const;
};

/// Jacobian rank with respect to (x, p) at random rational points. Symbols
/// outside x and p are replaced by random nonzero rationals per trial.
IndependenceResult functional_independence(const std::vector<PhaseFunction>& fs, int trials, SamplePoints& rng);

/// Point value of P^{ab}_{ijk}, symmetric in (a, b) and (i, j). Stored
/// densely with index order (a, b, i, j, k).
struct StructuralTensor {
    int dim = 0;
    std::vector<Rational> data;

    const Rational& operator()(int a, int b, int i, int j, int k) const;
    Rational& operator()(int a, int b, int i, int j, int k);
    bool is_zero() const;
};

/// Solves d_k K_ij = P^{ab}_{ijk} K_ab at x0 over every basis element of the
/// family.
StructuralTensor structural_tensor_at(const KillingFamily& family, std::span<const Rational> x0);

/// Haantjes tensor of K at x0 assembled from P alone:
/// Q^{ci}_{djk} = P^{cd}_{ijk} (Euclidean), d_k K^i_j = Q^{ci}_{djk} K^d_c,
/// U^{icb}_{dajk} = Q^{ci}_{dka} d^b_j - Q^{ci}_{dja} d^b_k + (Q^{cb}_{djk} - Q^{cb}_{dkj}) d^i_a,
/// N^i_jk = U^{icb}_{dajk} K^d_c K^a_b and H = UU K K K K.
TensorValue abundant_haantjes(const StructuralTensor& p, const TensorField& k, std::span<const Rational> x0);

struct Condition6b {
    /// Identity with the 1/2 antisymmetrization convention.
    bool holds = false;
    /// Identity with unnormalized brackets A_kn - A_nk.
    bool holds_unnormalized = false;
    /// det(K) LHS_{mknl} + 1/3 Adj^{pq} K_{p[l,m]} K_{q[k,n]}, 1/2 convention,
    /// slots (m, k, n, l).
    TensorField residual;
    std::optional<Index> witness;
};

Condition6b condition_6b(const TensorField& k);

/// Determinant and adjugate of a square polynomial matrix (0,2) field.
Poly determinant(const TensorField& k);
TensorField adjugate(const TensorField& k);

}  // namespace htk
