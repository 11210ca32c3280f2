#include "doctest.h"

#include "symcanon/koszul.hpp"
#include "symcanon/paramgen.hpp"
#include "symcanon/random.hpp"

using namespace symcanon;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

RingPtr R5() { return PolyRing::standard(F, 5); }

std::vector<Polynomial> vars(const RingPtr& R, int k) {
    std::vector<Polynomial> v;
    for (int i = 0; i < k; ++i) v.push_back(Polynomial::variable(R, i));
    return v;
}

RegularSequence random_linear(FieldRng& rng, const RingPtr& R, int k) {
    for (;;) {
        std::vector<Polynomial> v;
        for (int i = 0; i < k; ++i) v.push_back(rng.form(R, 1));
        auto s = RegularSequence::make(v);
        if (s.verified()) return s;
    }
}

// Stack the coefficient vectors of a list of polynomial vectors (all entries of degree e).
Matrix stacked(const std::vector<std::vector<Polynomial>>& cols, int e) {
    const auto& B = graded_basis(cols.front().front().ring()->nvars(), e);
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& c : cols) {
        std::vector<mpq_class> r;
        for (const auto& f : c)
            for (const auto& m : B) r.push_back(f.coefficient(m));
        rows.push_back(r);
    }
    return Matrix::from_rows(cols.front().front().ring()->field(), rows);
}

// Nullity of S -> S v over skew S with entries of degree e, built entry by entry.
long skew_nullity(const RegularSequence& v, int e) {
    const auto& R = v.ring();
    std::size_t m = v.length();
    std::vector<std::vector<Polynomial>> images;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q)
            for (const auto& mono : graded_basis(R->nvars(), e)) {
                Polynomial t(R);
                t.add_term(mono, 1);
                std::vector<Polynomial> out(m, Polynomial(R));
                out[p] = t * v.forms()[q];
                out[q] = -(t * v.forms()[p]);
                images.push_back(out);
            }
    return static_cast<long>(images.size() - rank(stacked(images, e + v.degree())));
}

// Rank of d_2 restricted to wedge^3 tensor forms of degree e - 1, as a map into skew entries of degree e.
long image_d2(const RegularSequence& v, int e) {
    const auto& R = v.ring();
    PolyMatrix d2 = koszul_differential(v, 2);
    std::vector<std::vector<Polynomial>> images;
    for (std::size_t c = 0; c < d2[0].size(); ++c)
        for (const auto& mono : graded_basis(R->nvars(), e - 1)) {
            Polynomial t(R);
            t.add_term(mono, 1);
            std::vector<Polynomial> col;
            for (const auto& row : d2) col.push_back(row[c] * t);
            images.push_back(col);
        }
    return static_cast<long>(rank(stacked(images, e)));
}

}  // namespace

TEST_CASE("is_regular_sequence examples") {
    auto R = R5();
    CHECK(is_regular_sequence(vars(R, 4)));
    CHECK(!is_regular_sequence({parse_poly("x0", R), parse_poly("x0*x1", R)}));
    SymmetricTableau T = realize(sample(1, F));
    PolyMatrix A = erase_first_row(T);
    // a2, a3, b2, b3 of the normal form
    CHECK(is_regular_sequence({A[0][1], A[0][2], A[0][4], A[0][5]}));
    CHECK(!RegularSequence::make({parse_poly("x0*x1", R), parse_poly("x0*x2", R)}).verified());
    CHECK_THROWS_AS(RegularSequence::make({parse_poly("x0", R), parse_poly("x0*x1", R)}), ContractError);
}

TEST_CASE("koszul_differential examples") {
    auto R = R5();
    auto s2 = RegularSequence::make(vars(R, 2));
    PolyMatrix d0 = koszul_differential(s2, 0), d1 = koszul_differential(s2, 1);
    CHECK(d0.size() == 1);
    CHECK(d0[0] == vars(R, 2));
    REQUIRE(d1.size() == 2);
    REQUIRE(d1[0].size() == 1);
    CHECK(d1[0][0] == -Polynomial::variable(R, 1));
    CHECK(d1[1][0] == Polynomial::variable(R, 0));
    CHECK(poly_matrix_is_zero(poly_mul(d0, d1)));
    auto s4 = RegularSequence::make(vars(R, 4));
    std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 4}, {4, 6}, {6, 4}, {4, 1}};
    for (int i = 0; i < 4; ++i) {
        PolyMatrix d = koszul_differential(s4, i);
        CHECK(d.size() == shapes[i].first);
        CHECK(d[0].size() == shapes[i].second);
    }
    CHECK_THROWS_AS(koszul_differential(s4, 4), ContractError);
    CHECK_THROWS_AS(koszul_differential(RegularSequence::make({parse_poly("x0", R), parse_poly("2*x0", R)}), 0), ContractError);
}

TEST_CASE("differentials compose to zero") {
    auto R = R5();
    FieldRng rng(41, F);
    for (int k = 2; k <= 5; ++k) {
        auto s = random_linear(rng, R, k);
        for (int i = 0; i + 1 < k; ++i) CHECK(poly_matrix_is_zero(poly_mul(koszul_differential(s, i), koszul_differential(s, i + 1))));
    }
}

TEST_CASE("solve_skew examples") {
    auto R = R5();
    auto v = RegularSequence::make(vars(R, 2));
    SkewWitness S = solve_skew({Polynomial::variable(R, 1), -Polynomial::variable(R, 0)}, v);
    REQUIRE(S.size() == 2);
    CHECK(S.entries[0][1] == Polynomial::constant(R, 1));
    CHECK(S.entries[1][0] == Polynomial::constant(R, -1));
    SkewWitness Z = solve_skew({Polynomial(R), Polynomial(R)}, v);
    CHECK(poly_matrix_is_zero(Z.entries));
    CHECK_THROWS_AS(solve_skew({Polynomial::variable(R, 0), Polynomial::variable(R, 0)}, v), ContractError);
}

TEST_CASE("solve_skew recovers quadric witnesses up to the ambiguity space") {
    auto R = R5();
    FieldRng rng(13, F);
    auto v = random_linear(rng, R, 4);
    for (int t = 0; t < 3; ++t) {
        SkewWitness S0{poly_matrix(R, 4, 4), 2};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                S0.entries[i][j] = rng.form(R, 2);
                S0.entries[j][i] = -S0.entries[i][j];
            }
        auto W = skew_apply(S0, v.forms());
        SkewWitness S = solve_skew(W, v);
        CHECK(S.is_skew());
        CHECK(skew_apply(S, v.forms()) == W);
        // the difference is a witness for zero
        SkewWitness D{poly_matrix(R, 4, 4), 2};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) D.entries[i][j] = S.entries[i][j] - S0.entries[i][j];
        for (const auto& f : skew_apply(D, v.forms())) CHECK(f.is_zero());
        CHECK(solve_skew(W, v).entries == S.entries);
    }
    CHECK(ambiguity_dim(v, 4) == 19);
}

TEST_CASE("ambiguity_dim examples") {
    auto R = R5();
    CHECK(ambiguity_dim(RegularSequence::make(vars(R, 4)), 4) == 19);
    CHECK(ambiguity_dim(RegularSequence::make(vars(R, 5)), 3) == 10);
    // the constant skew 2x2 matrix does not annihilate (x, y)
    auto v2 = RegularSequence::make(vars(R, 2));
    CHECK(ambiguity_dim(v2, 2) == 0);
    CHECK(skew_nullity(v2, 0) == 0);
}

TEST_CASE("ambiguity_dim agrees with the image of d2 and a direct kernel") {
    auto R = R5();
    FieldRng rng(3, F);
    for (int k : {4, 5}) {
        auto v = random_linear(rng, R, k);
        for (int d = 2; d <= 4; ++d) {
            int e = d - 2;
            long a = ambiguity_dim(v, d);
            CHECK(a == skew_nullity(v, e));
            if (e >= 1) CHECK(a == image_d2(v, e));
        }
    }
}
