#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "symcanon/koszul.hpp"
#include "symcanon/tableau.hpp"

namespace symcanon {

/// A point of the affine parameter space for K^2 = 11 normal forms:
/// 22 linear forms, 3 quadrics and 6 scalars.
struct ParameterPoint {
    static const std::array<const char*, 22>& linear_names();
    static const std::array<const char*, 3>& quadric_names();
    static const std::array<const char*, 6>& scalar_names();

    RingPtr ring;
    std::vector<Polynomial> linear;  // order of linear_names()
    std::vector<Polynomial> quadric; // order of quadric_names()
    std::vector<mpq_class> scalar;   // order of scalar_names()

    const Polynomial& lin(const std::string& name) const;
    const Polynomial& quad(const std::string& name) const;
    const mpq_class& scal(const std::string& name) const;

    /// Affine coordinates: coefficients in graded_basis order, then scalars.
    std::vector<mpq_class> coordinates() const;
    bool operator==(const ParameterPoint& o) const;
};

ParameterPoint sample(std::uint64_t seed, const FieldSpec& field);

struct Realization {
    SymmetricTableau tableau;
    /// 4x4 skew quadric witnesses and 5x5 skew linear witnesses.
    PolyMatrix P, Q, L, M;
    Matrix S;
    /// Which normalization was applied to make the 5-term sequences regular.
    std::string repair;
    Polynomial A2_from_P, A2_from_Q, B2_from_P, B2_from_Q;
};

/// Builds the K^2 = 11 tableau in normal form from a parameter point.
Realization realize_detailed(const ParameterPoint& p);
SymmetricTableau realize(const ParameterPoint& p);

/// Sequences v1, v2, v3 and the two 5-term sequences of a normal form tableau.
struct NormalFormSequences {
    std::vector<Polynomial> v1, v2, v3, abar, abar_prime;
};
NormalFormSequences normal_form_sequences(const SymmetricTableau& T);

struct DimensionLedger {
    long dim_P = 0;
    long ker_d1 = 0, ker_d1_prime = 0;
    long ker_D1 = 0, ker_D1_prime = 0;
    long dim_G = 0, dim_H = 0, dim_L = 0;
    long result = 0;
};

/// All components computed live from a sampled instance.
DimensionLedger ledger(std::uint64_t seed = 1, const FieldSpec& field = FieldSpec::prime(32003));

struct JacobianCheck {
    bool ok = false;
    int quadrics = 0;
    std::size_t jacobian_rank = 0;
    long dim_Ms_formula = 0;
    /// Projective dimension n(2n+2) - 1 - rank at the sampled point.
    long dim_Ms_tangent = 0;
    long codim_delta = 0;
    int resamples = 0;
};

JacobianCheck quadric_jacobian_check(int n, std::uint64_t seed, const FieldSpec& field = FieldSpec::prime(32003));

/// K^2 = 10 tableau (n = 1) with W = S v for a random skew quadric S and
/// v = (b1, b2, a1, a2); its linear row degenerates in one point.
SymmetricTableau sample_k10(std::uint64_t seed, const FieldSpec& field);

/// Random product of column moves; its matrix is symplectic by construction.
Matrix random_symplectic(const FieldSpec& field, std::size_t N, std::uint64_t seed, int moves = 24);

}  // namespace symcanon
