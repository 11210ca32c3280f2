#pragma once

#include <vector>

#include "symcanon/tableau.hpp"

namespace symcanon {

bool is_regular_sequence(const std::vector<Polynomial>& forms);

class RegularSequence {
public:
    /// Runs the codimension test; never throws for non-regular input.
    static RegularSequence make(std::vector<Polynomial> forms);

    const std::vector<Polynomial>& forms() const { return forms_; }
    std::size_t length() const { return forms_.size(); }
    bool verified() const { return verified_; }
    const RingPtr& ring() const { return forms_.front().ring(); }
    /// Common degree of the forms.
    int degree() const { return forms_.front().degree(); }

private:
    std::vector<Polynomial> forms_;
    bool verified_ = false;
};

/// d_i : wedge^{i+1} F -> wedge^i F with subsets in lexicographic order and
/// d(e_J) = sum_s (-1)^s v_{j_s} e_{J - j_s}. Rows index i-subsets, columns
/// (i+1)-subsets; d_0 = (v_1 ... v_m).
PolyMatrix koszul_differential(const RegularSequence& seq, int i);

struct SkewWitness {
    PolyMatrix entries;
    /// Entry degree; -1 for the zero witness with unknown degree.
    int degree = -1;
    std::size_t size() const { return entries.size(); }
    bool is_skew() const;
};

/// Returns a skew S with W = S v. Free coordinates of the underdetermined
/// system are set to zero (reduced echelon form, columns ordered by pair
/// then graded_basis).
SkewWitness solve_skew(const std::vector<Polynomial>& W, const RegularSequence& v);

/// Dimension of {S skew : S v = 0} with entries of degree d - 2*deg(v),
/// i.e. of ker(d_1) in degree d.
long ambiguity_dim(const RegularSequence& v, int d);

/// S * v as a column.
std::vector<Polynomial> skew_apply(const SkewWitness& S, const std::vector<Polynomial>& v);

}  // namespace symcanon
