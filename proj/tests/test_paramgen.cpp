#include "doctest.h"

#include "symcanon/canonical.hpp"
#include "symcanon/io.hpp"
#include "symcanon/normalform.hpp"
#include "symcanon/paramgen.hpp"

using namespace symcanon;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

}  // namespace

TEST_CASE("sample is deterministic and has 161 coordinates") {
    ParameterPoint a = sample(9, F), b = sample(9, F), c = sample(10, F);
    CHECK(a == b);
    CHECK(a.coordinates() == b.coordinates());
    CHECK(!(a == c));
    CHECK(a.coordinates() != c.coordinates());
    CHECK(a.coordinates().size() == 161);
    CHECK(a.linear.size() == 22);
    CHECK(a.quadric.size() == 3);
    CHECK(a.scalar.size() == 6);
    CHECK(22 * 5 + 3 * 15 + 6 == 161);
    for (const auto& f : a.linear) CHECK((f.is_zero() || f.degree() == 1));
    for (const auto& f : a.quadric) CHECK((f.is_zero() || f.degree() == 2));
    ParameterPoint q = sample(9, FieldSpec::rationals());
    for (const auto& x : q.coordinates()) {
        CHECK(x.get_den() == 1);
        CHECK(abs(x) <= 3);
    }
}

TEST_CASE("realize examples") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Realization r = realize_detailed(sample(seed, F));
        const SymmetricTableau& T = r.tableau;
        CHECK(T.n() == 2);
        CHECK(check_symmetry(T.alpha(), T.beta()).ok);
        CHECK(verify_normal_shape(T).ok);
        CHECK(r.A2_from_P == r.A2_from_Q);
        CHECK(r.B2_from_P == r.B2_from_Q);
        for (const auto& S : {r.P, r.Q, r.L, r.M})
            for (std::size_t i = 0; i < S.size(); ++i)
                for (std::size_t j = 0; j < S.size(); ++j) CHECK(S[i][j] == -S[j][i]);
        NormalFormSequences seq = normal_form_sequences(T);
        CHECK(is_regular_sequence(seq.v1));
        CHECK(is_regular_sequence(seq.v2));
        CHECK(is_regular_sequence(seq.v3));
        CHECK(is_regular_sequence(seq.abar));
        CHECK(is_regular_sequence(seq.abar_prime));
    }
}

TEST_CASE("golden instance serializes identically across runs") {
    std::string a = tableau_to_json(realize(sample(7, F))).dump(2);
    std::string b = tableau_to_json(realize(sample(7, F))).dump(2);
    CHECK(a == b);
    CHECK(params_to_json(sample(7, F)).dump() == params_to_json(sample(7, F)).dump());
}

TEST_CASE("golden seeds verify") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        VerificationReport rep = verify_instance(realize(sample(seed, F)));
        CHECK(rep.overall);
        CHECK(rep.assumed_count() == 2);
    }
}

TEST_CASE("dimension ledger") {
    DimensionLedger l = ledger();
    CHECK(l.dim_P == 161);
    CHECK(l.ker_d1 == 19);
    CHECK(l.ker_d1_prime == 19);
    CHECK(l.ker_D1 == 10);
    CHECK(l.ker_D1_prime == 10);
    CHECK(l.dim_G == 24);
    CHECK(l.dim_H == 32);
    CHECK(l.dim_L == 9);
    CHECK(l.result == 38);
    CHECK(l.result == l.dim_P - l.ker_d1 - l.ker_d1_prime - l.ker_D1 - l.ker_D1_prime - l.dim_G - l.dim_H - l.dim_L);
    CHECK(ledger(5).result == 38);
}

TEST_CASE("quadric Jacobian checks") {
    JacobianCheck j1 = quadric_jacobian_check(1, 1);
    CHECK(j1.ok);
    CHECK(j1.quadrics == 0);
    CHECK(j1.dim_Ms_formula == 3);
    JacobianCheck j2 = quadric_jacobian_check(2, 1);
    CHECK(j2.ok);
    CHECK(j2.quadrics == 1);
    CHECK(j2.jacobian_rank == 1);
    CHECK(j2.dim_Ms_formula == 10);
    JacobianCheck j3 = quadric_jacobian_check(3, 1);
    CHECK(j3.ok);
    CHECK(j3.quadrics == 3);
    CHECK(j3.jacobian_rank == 3);
    CHECK(j3.dim_Ms_formula == 20);
    for (int n = 1; n <= 4; ++n) {
        JacobianCheck j = quadric_jacobian_check(n, 3);
        CHECK(j.ok);
        CHECK(j.quadrics == n * (n - 1) / 2);
        CHECK(j.dim_Ms_formula == n * (n + 1) + (n + 1) * (n + 2) / 2 - 2);
        CHECK(j.dim_Ms_tangent == j.dim_Ms_formula);
        CHECK(j.codim_delta == 4);
    }
    CHECK_THROWS_AS(quadric_jacobian_check(5, 1), ContractError);
}

TEST_CASE("most seeds are regular on the first try") {
    int first_try = 0, total = 40;
    for (std::uint64_t seed = 100; seed < 100 + static_cast<std::uint64_t>(total); ++seed) {
        try {
            if (realize_detailed(sample(seed, F)).repair.empty()) ++first_try;
        } catch (const ContractError&) {
        }
    }
    CHECK(first_try * 10 >= total * 9);
}

TEST_CASE("K2 = 10 samples") {
    SymmetricTableau T = sample_k10(4, F);
    CHECK(T.n() == 1);
    CHECK(check_symmetry(T.alpha(), T.beta()).ok);
    VerificationReport rep = verify_instance(T);
    CHECK(rep.overall);
    CHECK(degeneracy_scheme(T).points == 1);
}
