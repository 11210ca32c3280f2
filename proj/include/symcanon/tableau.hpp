#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcanon/groebner.hpp"
#include "symcanon/linalg.hpp"
#include "symcanon/poly.hpp"

namespace symcanon {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix poly_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols);
PolyMatrix poly_transpose(const PolyMatrix& m);
PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b);
bool poly_matrix_is_zero(const PolyMatrix& m);
/// Determinant by cofactor expansion.
Polynomial poly_det(const PolyMatrix& m);
/// Entry-wise evaluation at a point.
Matrix evaluate(const PolyMatrix& m, const std::vector<mpq_class>& point, const FieldSpec& field);

struct SymmetryReport {
    bool ok = false;
    /// Degree layout problem, empty when the layout is fine.
    std::string layout_error;
    /// First (row, row) pair where alpha*beta^t - beta*alpha^t is nonzero, 0-based.
    std::optional<std::pair<std::size_t, std::size_t>> failing;
};

/// Checks the degree layout (first row cubic, remaining rows linear) unless
/// relaxed, then the symmetry alpha*beta^t = beta*alpha^t.
SymmetryReport check_symmetry(const PolyMatrix& alpha, const PolyMatrix& beta, bool relaxed_degrees = false);

/// A = (alpha beta), (n+1) x (2n+2), with alpha*beta^t = beta*alpha^t.
class SymmetricTableau {
public:
    /// Throws ContractError naming the first violated invariant.
    SymmetricTableau(RingPtr ring, PolyMatrix alpha, PolyMatrix beta, bool relaxed_degrees = false);

    const RingPtr& ring() const { return ring_; }
    int n() const { return static_cast<int>(alpha_.size()) - 1; }
    std::size_t size() const { return alpha_.size(); }
    const PolyMatrix& alpha() const { return alpha_; }
    const PolyMatrix& beta() const { return beta_; }
    bool relaxed() const { return relaxed_; }
    /// Entry of A = (alpha beta); columns n+1.. belong to beta.
    const Polynomial& entry(std::size_t i, std::size_t j) const;
    PolyMatrix matrix() const;

    bool operator==(const SymmetricTableau& o) const { return alpha_ == o.alpha_ && beta_ == o.beta_; }
    bool operator!=(const SymmetricTableau& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    PolyMatrix alpha_, beta_;
    bool relaxed_;
};

/// The six symmetry-preserving moves. Column indices are 0-based in
/// 0..n and refer to the pair (alpha_mu, beta_mu).
struct OpMove {
    enum class Kind { rows, add_col_same, add_col_pair, transfer, swap, rotate };
    Kind kind = Kind::swap;
    /// rows: invertible (n+1)x(n+1) scalar matrix, block diagonal diag(1, phi).
    std::optional<Matrix> g;
    mpq_class lambda = 0;
    int mu = 0, nu = 0;
    /// add_col_same/add_col_pair: false adds beta into alpha, true alpha into beta.
    bool swapped = false;

    static OpMove rows(Matrix g);
    static OpMove add_col_same(const mpq_class& lambda, int mu, bool swapped = false);
    static OpMove add_col_pair(const mpq_class& lambda, int mu, int nu, bool swapped = false);
    static OpMove transfer(const mpq_class& lambda, int mu, int nu);
    static OpMove swap(int mu, int nu);
    static OpMove rotate(int mu);

    std::string kind_name() const;
    /// The 2N x 2N symplectic matrix S of a column move (rows of A map to S*row).
    Matrix symplectic(const FieldSpec& field, std::size_t N) const;
};

/// Standard symplectic form [[0, I], [-I, 0]] of size 2N.
Matrix symplectic_form(const FieldSpec& field, std::size_t N);
bool is_symplectic(const Matrix& S);

SymmetricTableau apply_op(const SymmetricTableau& T, const OpMove& m);
SymmetricTableau apply_ops(const SymmetricTableau& T, const std::vector<OpMove>& moves);
/// Each row r of A = (alpha beta) becomes S*r, so the action composes as
/// apply(apply(T, S1), S2) = apply(T, S2*S1).
SymmetricTableau apply_symplectic(const SymmetricTableau& T, const Matrix& S);

/// The same moves on a pair of scalar n x (n+1) matrices; rows(g) here is
/// an arbitrary invertible n x n matrix acting on the left.
struct ScalarTableau {
    Matrix a, b;
    int n() const { return static_cast<int>(a.rows()); }
    Matrix joined() const;
};
bool scalar_symmetric(const ScalarTableau& M);
ScalarTableau apply_op(const ScalarTableau& M, const OpMove& m);
ScalarTableau apply_symplectic(const ScalarTableau& M, const Matrix& S);

/// Ideal of all k x k minors, expanded with memoized cofactors.
Ideal fitting_ideal(const PolyMatrix& M, int k, const RingPtr& ring);
/// All k x k minors with their (row subset, column subset), rows and columns ascending.
struct Minor {
    std::vector<std::size_t> rows, cols;
    Polynomial value;
};
std::vector<Minor> all_minors(const PolyMatrix& M, int k);

PolyMatrix erase_first_row(const SymmetricTableau& T);
SymmetricTableau attach_first_row(const RingPtr& ring, const std::vector<Polynomial>& first_row, const PolyMatrix& rest);

struct DegeneracyScheme {
    Ideal ideal;
    bool finite = false;
    bool reduced = false;
    long points = 0;
    long multiplicity = 0;
    int codim = 0;
};
DegeneracyScheme degeneracy_scheme(const SymmetricTableau& T);

}  // namespace symcanon
