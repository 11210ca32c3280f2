#include "doctest.h"

#include "symcanon/normalform.hpp"
#include "symcanon/paramgen.hpp"
#include "symcanon/random.hpp"

using namespace symcanon;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

std::vector<OpMove> random_moves(FieldRng& rng, int N, int count) {
    std::vector<OpMove> out;
    for (int i = 0; i < count; ++i) {
        int mu = static_cast<int>(rng.index(static_cast<std::size_t>(N)));
        int nu = (mu + 1 + static_cast<int>(rng.index(static_cast<std::size_t>(N - 1)))) % N;
        switch (rng.index(5)) {
            case 0: out.push_back(OpMove::add_col_same(rng.nonzero(), mu, rng.index(2) == 1)); break;
            case 1: out.push_back(OpMove::add_col_pair(rng.nonzero(), mu, nu, rng.index(2) == 1)); break;
            case 2: out.push_back(OpMove::transfer(rng.nonzero(), mu, nu)); break;
            case 3: out.push_back(OpMove::swap(mu, nu)); break;
            default: out.push_back(OpMove::rotate(mu)); break;
        }
    }
    return out;
}

ScalarTableau scalar(const FieldSpec& K, std::vector<std::vector<mpq_class>> a, std::vector<std::vector<mpq_class>> b) {
    return ScalarTableau{Matrix::from_rows(K, a), Matrix::from_rows(K, b)};
}

bool witness_holds(const ScalarTableau& M, const OrbitReduction& red) {
    return red.canonical.joined() == red.left * M.joined() * red.right && is_symplectic(red.right);
}

// Positions of A = (alpha beta), 1-based, that must vanish in normal form.
int pattern_violations(const SymmetricTableau& T) {
    int v = 0;
    const auto& a = T.alpha();
    const auto& b = T.beta();
    if (!a[1][0].is_zero()) ++v;
    if (!b[1][0].is_zero()) ++v;
    if (!a[2][2].is_zero()) ++v;
    if (!b[2][2].is_zero()) ++v;
    if (a[2][1] != -a[1][1]) ++v;
    if (b[2][1] != -b[1][1]) ++v;
    return v;
}

}  // namespace

TEST_CASE("scalar_orbit_reduce examples") {
    auto zero = scalar(F, {{0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {0, 0, 0}});
    auto r0 = scalar_orbit_reduce(zero);
    CHECK(r0.cls.k == 0);
    CHECK(r0.canonical.joined() == Matrix(F, 2, 6));
    auto one = scalar(F, {{1, 0}}, {{0, 0}});
    auto r1 = scalar_orbit_reduce(one);
    CHECK(r1.cls.k == 1);
    CHECK(r1.cls.r == 1);
    CHECK(witness_holds(one, r1));
    CHECK_THROWS_AS(scalar_orbit_reduce(scalar(F, {{1, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {1, 0, 0}})), ContractError);
}

TEST_CASE("exhaustive n = 1 classification over GF(3)") {
    FieldSpec K = FieldSpec::prime(3);
    FieldRng rng(3, K);
    int pairs = 0;
    for (int code = 0; code < 81; ++code) {
        std::vector<mpq_class> d;
        for (int c = code, i = 0; i < 4; ++i, c /= 3) d.push_back(c % 3);
        auto M = scalar(K, {{d[0], d[1]}}, {{d[2], d[3]}});
        REQUIRE(scalar_symmetric(M));
        ++pairs;
        auto red = scalar_orbit_reduce(M);
        int expected = static_cast<int>(rank(M.joined()));
        CHECK(red.cls.k == expected);
        CHECK(witness_holds(M, red));
        if (code % 8 != 0) continue;
        ScalarTableau cur = M;
        for (int t = 0; t < 100; ++t) {
            cur = apply_symplectic(cur, random_symplectic(K, 2, rng.raw(), 4));
            Matrix g = rng.invertible(1);
            cur = ScalarTableau{g * cur.a, g * cur.b};
        }
        CHECK(scalar_orbit_reduce(cur).cls.k == expected);
    }
    CHECK(pairs == 81);
}

TEST_CASE("orbit class is invariant under move words") {
    FieldRng rng(21, F);
    for (int t = 0; t < 20; ++t) {
        int n = 1 + static_cast<int>(rng.index(3));
        int k = static_cast<int>(rng.index(static_cast<std::size_t>(n + 1)));
        Matrix a(F, n, n + 1), b(F, n, n + 1);
        for (int i = 0; i < k; ++i) a.set(i, i, 1);
        ScalarTableau M = apply_symplectic(ScalarTableau{a, b}, random_symplectic(F, n + 1, rng.raw()));
        Matrix g = rng.invertible(n);
        M = ScalarTableau{g * M.a, g * M.b};
        REQUIRE(scalar_symmetric(M));
        auto red = scalar_orbit_reduce(M);
        CHECK(red.cls.k == k);
        CHECK(witness_holds(M, red));
        for (const auto& m : random_moves(rng, n + 1, 1 + static_cast<int>(rng.index(50)))) M = apply_op(M, m);
        CHECK(scalar_orbit_reduce(M).cls.k == k);
    }
}

TEST_CASE("verify_normal_shape examples") {
    SymmetricTableau T = realize(sample(1, F));
    CHECK(verify_normal_shape(T).ok);
    PolyMatrix alpha = T.alpha();
    alpha[1][0] = Polynomial::variable(T.ring(), 0);
    auto rep = verify_normal_shape(alpha, T.beta());
    CHECK(!rep.ok);
    bool found = false;
    for (const auto& v : rep.violations) found = found || (v.row == 2 && v.col == 1);
    CHECK(found);
    FieldRng rng(8, F);
    SymmetricTableau U = apply_ops(T, random_moves(rng, 3, 30));
    auto bad = verify_normal_shape(U);
    CHECK(!bad.ok);
    CHECK(pattern_violations(U) >= 4);
    CHECK(static_cast<int>(bad.violations.size()) >= pattern_violations(U));
}

TEST_CASE("reduce_k11 fixed point") {
    SymmetricTableau T = realize(sample(2, F));
    auto nf = reduce_k11(T);
    CHECK(nf.tableau == T);
    CHECK(nf.witness_moves.empty());
}

TEST_CASE("reduce_k11 restores the pattern after scrambling") {
    FieldRng rng(31, F);
    for (std::uint64_t seed : {1u, 3u, 5u}) {
        SymmetricTableau T = realize(sample(seed, F));
        SymmetricTableau U = apply_ops(T, random_moves(rng, 3, 30));
        auto nf = reduce_k11(U);
        CHECK(verify_normal_shape(nf.tableau).ok);
        CHECK(apply_ops(U, nf.witness_moves) == nf.tableau);
        CHECK(ideal_equal(degeneracy_scheme(nf.tableau).ideal, degeneracy_scheme(U).ideal));
        auto again = reduce_k11(nf.tableau);
        CHECK(again.tableau == nf.tableau);
        CHECK(again.witness_moves.empty());
    }
}

TEST_CASE("reduce_k11 rejects inputs without three reduced points") {
    SymmetricTableau T = realize(sample(1, F));
    PolyMatrix alpha = T.alpha(), beta = T.beta();
    for (std::size_t j = 0; j < 3; ++j) {
        alpha[2][j] = Polynomial(T.ring());
        beta[2][j] = Polynomial(T.ring());
    }
    CHECK_THROWS_AS(reduce_k11(SymmetricTableau(T.ring(), alpha, beta)), ContractError);
    CHECK_THROWS_AS(reduce_k11(sample_k10(1, F)), ContractError);
}

TEST_CASE("decompose_symplectic reproduces the action") {
    FieldRng rng(2, F);
    SymmetricTableau T = realize(sample(4, F));
    for (int t = 0; t < 5; ++t) {
        Matrix S = random_symplectic(F, 3, rng.raw());
        CHECK(apply_ops(T, decompose_symplectic(S)) == apply_symplectic(T, S));
    }
    CHECK(decompose_symplectic(Matrix::identity(F, 6)).empty());
}
