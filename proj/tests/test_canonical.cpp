#include "doctest.h"

#include "symcanon/canonical.hpp"
#include "symcanon/paramgen.hpp"
#include "symcanon/random.hpp"

using namespace symcanon;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

// Independent count: sum over twists of C(m - a + 4, 4), alternating.
long binom_sum(const GradedShifts& s, int m) {
    auto term = [&](const std::vector<int>& tw) {
        long t = 0;
        for (int a : tw)
            if (m - a >= 0) t += static_cast<long>(binomial(m - a + s.nvars - 1, s.nvars - 1));
        return t;
    };
    return term(s.f0) - term(s.f1) + term(s.f2);
}

// dim (F0)_m minus the rank of A on (F1)_m, computed by coefficient vectors.
long cokernel_dim(const SymmetricTableau& T, int m) {
    const auto& R = T.ring();
    int nv = R->nvars();
    PolyMatrix A = T.matrix();
    std::vector<int> row_deg(A.size(), 2);
    row_deg[0] = 0;
    long f0 = 0;
    for (int d : row_deg)
        if (m - d >= 0) f0 += static_cast<long>(graded_basis(nv, m - d).size());
    if (m < 3) return f0;
    std::vector<std::vector<mpq_class>> rows;
    for (std::size_t j = 0; j < A[0].size(); ++j)
        for (const auto& mono : graded_basis(nv, m - 3)) {
            Polynomial t(R);
            t.add_term(mono, 1);
            std::vector<mpq_class> v;
            for (std::size_t i = 0; i < A.size(); ++i) {
                if (m - row_deg[i] < 0) continue;
                Polynomial e = A[i][j] * t;
                for (const auto& b : graded_basis(nv, m - row_deg[i])) v.push_back(e.coefficient(b));
            }
            rows.push_back(v);
        }
    return f0 - static_cast<long>(rank(Matrix::from_rows(R->field(), rows)));
}

SymmetricTableau to_field(const SymmetricTableau& T, const FieldSpec& K) {
    auto R = PolyRing::standard(K, T.ring()->nvars());
    auto conv = [&](const PolyMatrix& M) {
        PolyMatrix out;
        for (const auto& row : M) {
            std::vector<Polynomial> r;
            for (const auto& e : row) r.push_back(e.to_ring(R));
            out.push_back(r);
        }
        return out;
    };
    return SymmetricTableau(R, conv(T.alpha()), conv(T.beta()), T.relaxed());
}

}  // namespace

TEST_CASE("build_resolution shapes and shifts") {
    SymmetricTableau T1 = sample_k10(1, F);
    GradedResolution R1 = build_resolution(T1);
    CHECK(R1.d1.size() == 2);
    CHECK(R1.d1[0].size() == 4);
    CHECK(R1.d2.size() == 4);
    CHECK(R1.d2[0].size() == 2);
    CHECK(R1.shifts.f0 == std::vector<int>{0, 2});
    CHECK(R1.shifts.f1 == std::vector<int>{3, 3, 3, 3});
    CHECK(R1.shifts.f2 == std::vector<int>{6, 4});
    GradedResolution R2 = build_resolution(realize(sample(1, F)));
    CHECK(R2.d1.size() == 3);
    CHECK(R2.d1[0].size() == 6);
    CHECK(R2.d2.size() == 6);
    CHECK(R2.d2[0].size() == 3);
    CHECK(poly_matrix_is_zero(poly_mul(R2.d1, R2.d2)));
    auto ring = PolyRing::standard(F, 5);
    PolyMatrix d1{{Polynomial::variable(ring, 0)}}, d2{{Polynomial::variable(ring, 1)}};
    CHECK_THROWS_AS(make_resolution(ring, d1, d2, GradedShifts{{0}, {1}, {2}, 5}), ContractError);
}

TEST_CASE("graded_dim examples") {
    GradedShifts s = GradedShifts::canonical(2);
    CHECK(graded_dim(s, 0) == 1);
    CHECK(graded_dim(s, 1) == 5);
    CHECK(graded_dim(s, 2) == 17);
    CHECK(graded_dim(s, 3) == 39);
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 8; ++m) CHECK(graded_dim(GradedShifts::canonical(n), m) == binom_sum(GradedShifts::canonical(n), m));
}

TEST_CASE("graded_dim equals the cokernel dimension of A") {
    for (std::uint64_t seed : {1u, 2u}) {
        SymmetricTableau T = realize(sample(seed, F));
        for (int m = 0; m <= 5; ++m) CHECK(graded_dim(build_resolution(T), m) == cokernel_dim(T, m));
    }
    SymmetricTableau T10 = sample_k10(1, F);
    for (int m = 0; m <= 5; ++m) CHECK(graded_dim(build_resolution(T10), m) == cokernel_dim(T10, m));
}

TEST_CASE("invariants examples") {
    for (int n = 1; n <= 5; ++n) {
        SurfaceInvariants inv = invariants(GradedShifts::canonical(n));
        CHECK(inv.p_g == 5);
        CHECK(inv.q == 0);
        CHECK(inv.chi == 6);
        CHECK(inv.n == n);
        CHECK(inv.K2 == n + 9);
        CHECK(inv.delta == static_cast<long>(binomial(static_cast<int>(inv.K2) - 8, 2)));
    }
    CHECK(invariants(GradedShifts::canonical(1)).delta == 1);
    CHECK(invariants(GradedShifts::canonical(2)).delta == 3);
    CHECK(invariants(GradedShifts::canonical(3)).delta == 6);
    CHECK_THROWS_AS(invariants(GradedShifts{{0, 1}, {3, 3, 3, 3}, {6, 4}, 5}), ContractError);
}

TEST_CASE("acyclicity examples") {
    auto R2 = PolyRing::make({"x", "y"}, F);
    PolyMatrix d1{{Polynomial::variable(R2, 0), Polynomial::variable(R2, 1)}};
    PolyMatrix d2{{-Polynomial::variable(R2, 1)}, {Polynomial::variable(R2, 0)}};
    CHECK(acyclicity_check(make_resolution(R2, d1, d2, GradedShifts{{0}, {1, 1}, {2}, 2})).ok);
    SymmetricTableau T = realize(sample(1, F));
    AcyclicityReport rep = acyclicity_check(build_resolution(T));
    CHECK(rep.ok);
    CHECK(rep.codim_d1 == 2);
    CHECK(codim(fitting_ideal(T.matrix(), 3, T.ring())) == 2);
    SymmetricTableau AA(T.ring(), T.alpha(), T.alpha());
    CHECK(!acyclicity_check(build_resolution(AA)).ok);
    PolyMatrix alpha = T.alpha(), beta = T.beta();
    for (std::size_t j = 0; j < 3; ++j) {
        alpha[2][j] = Polynomial(T.ring());
        beta[2][j] = Polynomial(T.ring());
    }
    AcyclicityReport drop = acyclicity_check(build_resolution(SymmetricTableau(T.ring(), alpha, beta)));
    CHECK(!drop.ok);
    CHECK(!drop.rank_d1.ok);
}

TEST_CASE("ring condition and conductor") {
    SymmetricTableau T = realize(sample(2, F));
    RingConditionResult rc = ring_condition_check(T);
    CHECK(rc.status == CheckStatus::pass);
    CHECK(rc.saturated_equal);
    REQUIRE(rc.unsaturated_equal);
    CHECK(*rc.unsaturated_equal);
    Ideal C = conductor_ideal(T);
    CHECK(codim(C) == 4);
    CHECK(point_count(saturate(C)) == 3);
    SymmetricTableau T10 = sample_k10(2, F);
    RingConditionResult rc10 = ring_condition_check(T10);
    CHECK(rc10.status == CheckStatus::pass);
    CHECK(!rc10.unsaturated_equal);
    CHECK(point_count(saturate(conductor_ideal(T10))) == 1);
    PolyMatrix alpha = T.alpha(), beta = T.beta();
    for (std::size_t j = 0; j < 3; ++j) {
        alpha[2][j] = Polynomial(T.ring());
        beta[2][j] = Polynomial(T.ring());
    }
    SymmetricTableau bad(T.ring(), alpha, beta);
    CHECK(ring_condition_check(bad).status == CheckStatus::skipped);
    CHECK_THROWS_AS(conductor_ideal(bad), ContractError);
}

TEST_CASE("ring condition is invariant under moves") {
    FieldRng rng(12, F);
    SymmetricTableau T = realize(sample(3, F));
    RingConditionResult base = ring_condition_check(T);
    SymmetricTableau U = apply_ops(T, {OpMove::transfer(rng.nonzero(), 0, 1), OpMove::rotate(2),
                                       OpMove::add_col_pair(rng.nonzero(), 1, 2, true), OpMove::swap(0, 2)});
    RingConditionResult moved = ring_condition_check(U);
    CHECK(moved.status == CheckStatus::pass);
    CHECK(ideal_equal(*moved.sat_In_A, *base.sat_In_A));
    CHECK(ideal_equal(*moved.sat_In_A_prime, *base.sat_In_A_prime));
}

TEST_CASE("multiplication table laws") {
    SymmetricTableau T = realize(sample(1, F));
    MultiplicationTable t = multiplication_table(T);
    int n = t.n;
    REQUIRE(n == 2);
    for (int k = 1; k <= n; ++k) {
        const TableEntry& e = t.entries[0][k];
        CHECK(e.c0.is_zero());
        for (int j = 1; j <= n; ++j) CHECK(e.c[j - 1] == Polynomial::constant(t.ring, j == k ? 1 : 0));
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            CHECK(t.entries[i][j].c0 == t.entries[j][i].c0);
            CHECK(t.entries[i][j].c == t.entries[j][i].c);
        }
    CHECK(check_associativity(t));
    // (v1 v2) v1 against v1 (v2 v1), as cleared residues
    const TableEntry& v1 = t.entries[0][1];
    TableEntry lhs = table_multiply(t, t.entries[1][2], v1);
    TableEntry rhs = table_multiply(t, v1, t.entries[2][1]);
    CHECK(cleared_residue(t, lhs) == cleared_residue(t, rhs));
    MultiplicationTable t2 = multiplication_table(T, 1);
    CHECK(t2.columns != t.columns);
    CHECK(tables_agree(t, t2));
}

TEST_CASE("generic reflexivity") {
    ReflexivityReport ok = generic_reflexivity_check(32003, 3);
    CHECK(ok.ok);
    CHECK(ok.composite_zero);
    CHECK(ok.degrees.size() == 4);
    for (const auto& d : ok.degrees) CHECK(d.exact);
    ReflexivityReport flipped = generic_reflexivity_check(32003, 3, true);
    CHECK(!flipped.ok);
    CHECK(!flipped.composite_zero);
    CHECK_THROWS_AS(generic_reflexivity_check(3, 4), ContractError);
}

TEST_CASE("verify_instance examples") {
    SymmetricTableau T = realize(sample(1, F));
    VerificationReport rep = verify_instance(T);
    CHECK(rep.overall);
    CHECK(rep.assumed_count() == 2);
    for (const auto& c : rep.checks)
        if (c.status != CheckStatus::assumed) CHECK(c.status == CheckStatus::pass);
    REQUIRE(rep.find("Ann_𝒜(𝓡) prime"));
    CHECK(rep.find("Ann_𝒜(𝓡) prime")->status == CheckStatus::assumed);
    CHECK(invariants(build_resolution(T)).delta == degeneracy_scheme(T).points);

    auto R = T.ring();
    PolyMatrix zero = poly_matrix(R, 3, 3);
    VerificationReport zr = verify_instance(SymmetricTableau(R, zero, zero, true));
    CHECK(!zr.overall);
    REQUIRE(zr.find("acyclicity"));
    CHECK(zr.find("acyclicity")->status == CheckStatus::fail);
}

TEST_CASE("reports agree over Q and GF(p)") {
    SymmetricTableau Tq = realize(sample(2, FieldSpec::rationals()));
    SymmetricTableau Tp = to_field(Tq, F);
    VerificationReport a = verify_instance(Tq), b = verify_instance(Tp);
    CHECK(a.overall);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].status == b.checks[i].status);
        CHECK(a.checks[i].detail == b.checks[i].detail);
    }
}
