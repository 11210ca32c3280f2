#include "doctest.h"

#include "symcanon/paramgen.hpp"
#include "symcanon/random.hpp"

using namespace symcanon;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

PolyMatrix constants(const RingPtr& R, std::vector<std::vector<int>> v) {
    PolyMatrix m;
    for (auto& row : v) {
        std::vector<Polynomial> r;
        for (int x : row) r.push_back(Polynomial::constant(R, x));
        m.push_back(r);
    }
    return m;
}

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

}  // namespace

TEST_CASE("check_symmetry examples") {
    auto R = PolyRing::standard(F, 5);
    auto ok = check_symmetry(constants(R, {{1, 0}, {0, 1}}), constants(R, {{0, 1}, {1, 0}}), true);
    CHECK(ok.ok);
    // both products vanish here
    CHECK(check_symmetry(constants(R, {{1, 0}, {0, 0}}), constants(R, {{0, 1}, {0, 0}}), true).ok);
    auto bad = check_symmetry(constants(R, {{1, 0}, {0, 0}}), constants(R, {{0, 0}, {1, 0}}), true);
    CHECK(!bad.ok);
    REQUIRE(bad.failing);
    CHECK(bad.failing->first == 0);
    CHECK(bad.failing->second == 1);
    // strict layout rejects constants separately from symmetry
    auto lay = check_symmetry(constants(R, {{1, 0}, {0, 1}}), constants(R, {{0, 1}, {1, 0}}), false);
    CHECK(!lay.ok);
    CHECK(!lay.layout_error.empty());
    for (std::uint64_t s : {1u, 2u, 3u}) {
        SymmetricTableau T = realize(sample(s, F));
        CHECK(check_symmetry(T.alpha(), T.beta()).ok);
    }
}

TEST_CASE("constructor refuses asymmetric data") {
    auto R = PolyRing::standard(F, 5);
    CHECK_THROWS_AS(SymmetricTableau(R, constants(R, {{1, 0}, {0, 0}}), constants(R, {{0, 0}, {1, 0}}), true), ContractError);
}

TEST_CASE("apply_op examples") {
    SymmetricTableau T = realize(sample(4, F));
    CHECK(apply_ops(T, {OpMove::swap(0, 2), OpMove::swap(0, 2)}) == T);
    CHECK(apply_op(T, OpMove::swap(1, 2)) != T);
    std::vector<OpMove> four(4, OpMove::rotate(1));
    CHECK(apply_ops(T, four) == T);
    SymmetricTableau r1 = apply_op(T, OpMove::rotate(1));
    CHECK(r1.alpha()[0][1] == T.beta()[0][1]);
    CHECK(r1.beta()[0][1] == -T.alpha()[0][1]);
    CHECK(apply_ops(T, {OpMove::transfer(5, 0, 2), OpMove::transfer(-5, 0, 2)}) == T);
    CHECK_THROWS_AS(apply_op(T, OpMove::swap(0, 3)), ContractError);
    Matrix g = Matrix::identity(F, 3);
    g.set(0, 1, 1);
    CHECK_THROWS_AS(apply_op(T, OpMove::rows(g)), ContractError);
}

TEST_CASE("apply_symplectic examples") {
    SymmetricTableau T = realize(sample(5, F));
    CHECK(apply_symplectic(T, Matrix::identity(F, 6)) == T);
    SymmetricTableau J = apply_symplectic(T, symplectic_form(F, 3));
    std::vector<OpMove> rot{OpMove::rotate(0), OpMove::rotate(1), OpMove::rotate(2)};
    CHECK(J == apply_ops(T, rot));
    Matrix notS = Matrix::identity(F, 6);
    notS.set(0, 1, 1);
    CHECK_THROWS_AS(apply_symplectic(T, notS), ContractError);
}

TEST_CASE("every move kind preserves symmetry") {
    FieldRng rng(77, F);
    SymmetricTableau T = realize(sample(6, F));
    for (const auto& m : random_moves(rng, 3, 60)) {
        T = apply_op(T, m);
        CHECK(check_symmetry(T.alpha(), T.beta()).ok);
        CHECK(is_symplectic(m.symplectic(F, 3)));
    }
    Matrix g = rng.invertible(3);
    for (std::size_t j = 0; j < 3; ++j) {
        g.set(0, j, j == 0 ? 1 : 0);
        g.set(j, 0, j == 0 ? 1 : 0);
    }
    if (determinant(g) != 0) CHECK(check_symmetry(apply_op(T, OpMove::rows(g)).alpha(), apply_op(T, OpMove::rows(g)).beta()).ok);
}

TEST_CASE("symplectic action law") {
    FieldRng rng(5, F);
    SymmetricTableau T = realize(sample(2, F));
    for (int t = 0; t < 5; ++t) {
        Matrix S1 = random_symplectic(F, 3, rng.raw()), S2 = random_symplectic(F, 3, rng.raw());
        CHECK(apply_symplectic(apply_symplectic(T, S1), S2) == apply_symplectic(T, S2 * S1));
    }
}

TEST_CASE("fitting_ideal examples") {
    auto R = PolyRing::standard(F, 5);
    auto P = [&](const char* s) { return parse_poly(s, R); };
    PolyMatrix M{{P("x0"), P("x1")}, {P("x2"), P("x3")}};
    CHECK(ideal_equal(fitting_ideal(M, 1, R), Ideal(R, {P("x0"), P("x1"), P("x2"), P("x3")})));
    CHECK(ideal_equal(fitting_ideal(M, 2, R), Ideal(R, {P("x0*x3 - x1*x2")})));
    PolyMatrix M3{{P("x0"), P("x1"), P("x2")}, {P("x3"), P("x4"), P("x0")}};
    auto minors = all_minors(M3, 2);
    REQUIRE(minors.size() == 3);
    CHECK(minors[0].value == P("x0*x4 - x1*x3"));
    CHECK(minors[1].value == P("x0^2 - x2*x3"));
    CHECK(minors[2].value == P("x1*x0 - x2*x4"));
    CHECK_THROWS_AS(fitting_ideal(M3, 3, R), ContractError);
    CHECK(is_unit_ideal(fitting_ideal(M3, 0, R)));
}

TEST_CASE("determinantal containment and invariance under scalar operations") {
    auto R = PolyRing::standard(F, 5);
    FieldRng rng(19, F);
    for (int t = 0; t < 4; ++t) {
        PolyMatrix M = poly_matrix(R, 3, 4);
        for (auto& row : M)
            for (auto& e : row) e = rng.form(R, 1);
        Ideal I1 = fitting_ideal(M, 1, R), I2 = fitting_ideal(M, 2, R), I3 = fitting_ideal(M, 3, R);
        CHECK(ideal_subset(I2, I1));
        CHECK(ideal_subset(I3, I2));
        Matrix g = rng.invertible(3), h = rng.invertible(4);
        PolyMatrix G = poly_matrix(R, 3, 3), H = poly_matrix(R, 4, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) G[i][j] = Polynomial::constant(R, g.at(i, j));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) H[i][j] = Polynomial::constant(R, h.at(i, j));
        PolyMatrix M2 = poly_mul(poly_mul(G, M), H);
        CHECK(ideal_equal(fitting_ideal(M2, 2, R), I2));
        CHECK(ideal_equal(fitting_ideal(M2, 3, R), I3));
    }
}

TEST_CASE("erase_first_row examples") {
    SymmetricTableau T1 = sample_k10(3, F);
    PolyMatrix a1 = erase_first_row(T1);
    CHECK(a1.size() == 1);
    CHECK(a1[0].size() == 4);
    SymmetricTableau T = realize(sample(3, F));
    PolyMatrix A = erase_first_row(T);
    CHECK(A.size() == 2);
    CHECK(A[0].size() == 6);
    for (const auto& row : A)
        for (const auto& e : row) CHECK((e.is_zero() || e.degree() == 1));
    std::vector<Polynomial> first = T.matrix()[0];
    CHECK(attach_first_row(T.ring(), first, A) == T);
}

TEST_CASE("degeneracy_scheme examples") {
    SymmetricTableau T = realize(sample(1, F));
    DegeneracyScheme d = degeneracy_scheme(T);
    CHECK(d.finite);
    CHECK(d.reduced);
    CHECK(d.points == 3);
    CHECK(d.codim == 4);
    DegeneracyScheme d10 = degeneracy_scheme(sample_k10(2, F));
    CHECK(d10.points == 1);
    // a zero row kills every maximal minor of A'
    PolyMatrix alpha = T.alpha(), beta = T.beta();
    auto R = T.ring();
    for (std::size_t j = 0; j < 3; ++j) {
        alpha[2][j] = Polynomial(R);
        beta[2][j] = Polynomial(R);
    }
    DegeneracyScheme dz = degeneracy_scheme(SymmetricTableau(R, alpha, beta));
    CHECK(!dz.finite);
}

TEST_CASE("degeneracy scheme is invariant under moves") {
    FieldRng rng(4, F);
    SymmetricTableau T = realize(sample(7, F));
    Ideal base = degeneracy_scheme(T).ideal;
    for (int t = 0; t < 3; ++t) {
        SymmetricTableau U = apply_ops(T, random_moves(rng, 3, 12));
        CHECK(ideal_equal(degeneracy_scheme(U).ideal, base));
    }
}
