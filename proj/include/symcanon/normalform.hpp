#pragma once

#include <string>
#include <vector>

#include "symcanon/tableau.hpp"

namespace symcanon {

struct OrbitClass {
    int r = 0;  // rank of the a-block
    int s = 0;  // k - r
    int k = 0;  // rank of (a | b)
};

struct OrbitReduction {
    OrbitClass cls;
    /// a = (I_k 0; 0 0), b = 0.
    ScalarTableau canonical;
    /// canonical.joined() = left * M.joined() * right, right symplectic.
    Matrix left, right;
};

/// Classifies a scalar symmetric pair under GL_n x Sp_{2n+2} with a
/// witness factorization that is verified before returning.
OrbitReduction scalar_orbit_reduce(const ScalarTableau& M);

struct ShapeViolation {
    std::size_t row = 0, col = 0;  // 1-based position in A = (alpha beta)
    std::string message;
};

struct ShapeReport {
    bool ok = false;
    std::vector<ShapeViolation> violations;
};

/// Zero pattern [0 a2 a3 | 0 b2 b3 ; a4 -a2 0 | b4 -b2 0] of the linear
/// rows and the symmetry identities, for n = 2.
ShapeReport verify_normal_shape(const PolyMatrix& alpha, const PolyMatrix& beta);
ShapeReport verify_normal_shape(const SymmetricTableau& T);

struct NormalFormK11 {
    SymmetricTableau tableau;
    std::vector<OpMove> witness_moves;
    /// Generalized rows (c1, c2, c3) of the input cutting out the three points.
    std::vector<std::vector<mpq_class>> generalized_rows;
};

/// Brings an n = 2 tableau whose linear part degenerates in 3 reduced
/// points to normal form. Replaying witness_moves on T gives the output.
NormalFormK11 reduce_k11(const SymmetricTableau& T);

/// Writes S as a product of column moves: apply_ops with the returned list
/// acts as apply_symplectic(., S). Verified by multiplication.
std::vector<OpMove> decompose_symplectic(const Matrix& S);

}  // namespace symcanon
