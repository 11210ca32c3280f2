#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcanon/tableau.hpp"

namespace symcanon {

/// Maximal minor det(alpha_I beta_J), 0-based pair indices.
struct MinorIndex {
    std::vector<int> alpha_cols, beta_cols;
    bool good() const;
    /// |alpha_cols ∩ beta_cols|.
    int overlap() const;
};

Polynomial minor_value(const SymmetricTableau& T, const MinorIndex& idx);

struct RegularityWitnesses {
    bool det_alpha_nonzero = false;
    /// (det alpha) : det beta = (det alpha).
    bool quotient_equal = false;
    bool ok() const { return det_alpha_nonzero && quotient_equal; }
};

struct BaseChangeCert {
    std::vector<OpMove> moves;
    SymmetricTableau output;
    Polynomial det_alpha, det_beta;
    RegularityWitnesses witnesses;
    int phase1_trials = 0, phase2_trials = 0;
};

/// Signed sum of the Plucker relation on the columns of M (M rows, N columns):
/// sum over splittings of c into (t | s-t) increasing parts of
/// sign * [a, c_first] * [c_second, b], with t = M - |a| and
/// |c| = 2M - |a| - |b| > M. Column indices are 0-based.
/// ignore_signs replaces every sign by +1 (negative control).
Polynomial plucker_residual(const PolyMatrix& M, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                            const std::vector<std::size_t>& c, bool ignore_signs = false);

/// f is a nonzerodivisor on R/I, i.e. (I : f) = I. Throws ContractError for f = 0.
bool is_nzd_mod(const Polynomial& f, const Ideal& I);

/// Recomputes the witnesses from the tableau alone.
RegularityWitnesses koszul_type_witnesses(const SymmetricTableau& T);

/// Symmetry-preserving column moves making det(alpha), det(beta) a regular
/// sequence. Accepts relaxed (e.g. linear or constant) square pairs.
/// Throws BudgetExceeded after 'budget' trials in a phase.
BaseChangeCert make_koszul_type(const SymmetricTableau& T, std::uint64_t seed = 0, int budget = 64);

/// Replays the moves, checking symmetry after each, and re-derives the witnesses.
bool verify_certificate(const SymmetricTableau& input, const BaseChangeCert& cert, std::string* why = nullptr);

/// Seeded symmetric pairs of linear forms in 5 variables, k x k with k in 1..3.
/// Shapes cycle through a singular-alpha family, a shared-factor diagonal
/// family and a scrambled diagonal family.
SymmetricTableau sample_linear_pair(std::uint64_t seed, int k, const FieldSpec& field);

}  // namespace symcanon
