#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcanon/tableau.hpp"

namespace symcanon {

/// Twists of F0 <- F1 <- F2 (generator degrees).
struct GradedShifts {
    std::vector<int> f0, f1, f2;
    int nvars = 5;
    /// {0, 2^n}, {3^(2n+2)}, {6, 4^n}.
    static GradedShifts canonical(int n, int nvars = 5);
};

struct GradedResolution {
    RingPtr ring;
    int n = 0;
    PolyMatrix d1;  // F1 -> F0, here A = (alpha beta)
    PolyMatrix d2;  // F2 -> F1, here (-beta^t ; alpha^t)
    GradedShifts shifts;
};

GradedResolution build_resolution(const SymmetricTableau& T);
/// Arbitrary two-step complex; throws ContractError unless d1*d2 = 0.
GradedResolution make_resolution(const RingPtr& ring, PolyMatrix d1, PolyMatrix d2, GradedShifts shifts);

/// Sum_i (-1)^i Sum_j C(m - a_ij + nvars - 1, nvars - 1).
long graded_dim(const GradedShifts& s, int m);
long graded_dim(const GradedResolution& R, int m);

struct SurfaceInvariants {
    long p_g = 0, q = 0, K2 = 0, chi = 0, n = 0, delta = 0;
};
/// Solves the Hilbert comparison at m = 1, 2, 3 and cross-checks m = 4, 5.
SurfaceInvariants invariants(const GradedShifts& s);
SurfaceInvariants invariants(const GradedResolution& R);

struct RankCertificate {
    std::size_t expected = 0;
    bool ok = false;
    /// A nonvanishing maximal minor, when ok.
    std::vector<std::size_t> rows, cols;
    std::string detail;
};

struct AcyclicityReport {
    bool ok = false;
    RankCertificate rank_d1, rank_d2;
    int codim_d1 = 0, codim_d2 = 0;
    std::string detail;
};
/// Buchsbaum-Eisenbud: ranks of both maps and codim of their maximal-minor
/// ideals (at least 2 each).
AcyclicityReport acyclicity_check(const GradedResolution& R);

enum class CheckStatus { pass, fail, skipped, assumed };
std::string to_string(CheckStatus s);

struct RingConditionResult {
    CheckStatus status = CheckStatus::skipped;
    std::string reason;
    bool saturated_equal = false;
    /// n = 2 only: I_2(A) = I_2(A') without saturation.
    std::optional<bool> unsaturated_equal;
    std::optional<Ideal> sat_In_A_prime, sat_In_A;
};
RingConditionResult ring_condition_check(const SymmetricTableau& T);

/// saturate(I_n(A')) + I_{n+1}(A); throws ContractError if the ring condition fails.
Ideal conductor_ideal(const SymmetricTableau& T);

struct TableEntry {
    Polynomial c0;               // degree 4
    std::vector<Polynomial> c;   // c[k-1] multiplies v_k, degree 2
};

struct MultiplicationTable {
    RingPtr ring;
    int n = 0;
    /// Columns of A' (0-based in 0..2n+1) of the invertible n x n block.
    std::vector<std::size_t> columns;
    /// v_k = N[k] / D with N[0] = D.
    Polynomial D;
    std::vector<Polynomial> N;
    /// Ideal used for the coefficients of the surface.
    Ideal surface{RingPtr{}};
    bool surface_saturated = false;
    /// entries[i][j] = v_i v_j for 0 <= i, j <= n, v_0 = 1.
    std::vector<std::vector<TableEntry>> entries;
};

/// Cramer table over I_{n+1}(A); 'skip' selects a later valid column subset.
MultiplicationTable multiplication_table(const SymmetricTableau& T, int skip = 0);

/// x = a0 + sum a_k v_k with a.size() = n; returns NF(a0*D + sum a_k N_k).
Polynomial cleared_residue(const MultiplicationTable& t, const TableEntry& x);
TableEntry table_multiply(const MultiplicationTable& t, const TableEntry& x, const TableEntry& y);
/// (v_i v_j) v_k = v_i (v_j v_k) for all triples, through cleared residues.
bool check_associativity(const MultiplicationTable& t);
/// Entries of b agree with those of a as elements, using a's fractions.
bool tables_agree(const MultiplicationTable& a, const MultiplicationTable& b);

struct ReflexivityDegree {
    int degree = 0;
    long kernel_dim = 0, image_dim = 0;
    bool exact = false;
};
struct ReflexivityReport {
    bool ok = false;
    bool composite_zero = false;
    std::vector<ReflexivityDegree> degrees;
};
/// O^2 -> O^4 -> O^6 over GF(p)[X1..X4, Y1..Y4]/(XiYj - XjYi), exactness at
/// the middle in degrees 0..D. flip_sign negates the first entry of the 6x4 map.
ReflexivityReport generic_reflexivity_check(std::uint32_t p, int D, bool flip_sign = false);
/// Same complex with X -> A, Y -> B for forms A_i (common degree) and B_i (common degree).
ReflexivityReport reflexivity_check(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B, int D,
                                    bool flip_sign = false);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
};

struct VerificationReport {
    int n = 0;
    std::vector<CheckResult> checks;
    bool overall = false;
    int assumed_count() const;
    const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
    int parallelism = 1;
};

VerificationReport verify_instance(const SymmetricTableau& T, const VerifyOptions& opt = {});

}  // namespace symcanon
