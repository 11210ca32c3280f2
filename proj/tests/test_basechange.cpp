#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "symcanon/basechange.hpp"
#include "symcanon/random.hpp"

using namespace symcanon;

namespace {

const FieldSpec F = FieldSpec::prime(32003);

Polynomial minor_in_order(const PolyMatrix& M, const std::vector<std::size_t>& cols) {
    PolyMatrix sub;
    for (const auto& row : M) {
        std::vector<Polynomial> r;
        for (std::size_t c : cols) r.push_back(row[c]);
        sub.push_back(r);
    }
    return poly_det(sub);
}

// Direct expansion of the Plucker sum, signs from inversion counts.
Polynomial plucker_oracle(const PolyMatrix& M, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                          const std::vector<std::size_t>& c) {
    std::size_t m = M.size(), t = m - a.size();
    Polynomial total(M[0][0].ring());
    std::vector<bool> pick(c.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(t), true);
    do {
        std::vector<std::size_t> first(a), second, order;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (pick[i]) {
                first.push_back(c[i]);
                order.push_back(i);
            }
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!pick[i]) {
                second.push_back(c[i]);
                order.push_back(i);
            }
        second.insert(second.end(), b.begin(), b.end());
        int inv = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j) inv += order[i] > order[j];
        Polynomial term = minor_in_order(M, first) * minor_in_order(M, second);
        total = inv % 2 ? total - term : total + term;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
}

PolyMatrix const_matrix(const RingPtr& R, const Matrix& m) {
    PolyMatrix out = poly_matrix(R, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Polynomial::constant(R, m.at(i, j));
    return out;
}

std::vector<std::size_t> take(std::vector<std::size_t>& pool, std::size_t k) {
    std::vector<std::size_t> out(pool.begin(), pool.begin() + static_cast<long>(k));
    pool.erase(pool.begin(), pool.begin() + static_cast<long>(k));
    return out;
}

}  // namespace

TEST_CASE("plucker_residual on Gr(2,4)") {
    auto R = PolyRing::standard(F, 5);
    FieldRng rng(1, F);
    PolyMatrix M = const_matrix(R, rng.matrix(2, 4));
    CHECK(plucker_residual(M, {0}, {}, {1, 2, 3}).is_zero());
    // the classical three-term identity p01 p23 - p02 p13 + p03 p12
    auto p = [&](std::size_t i, std::size_t j) { return minor_in_order(M, {i, j}); };
    CHECK((p(0, 1) * p(2, 3) - p(0, 2) * p(1, 3) + p(0, 3) * p(1, 2)).is_zero());
    CHECK(!plucker_residual(M, {0}, {}, {1, 2, 3}, true).is_zero());
    CHECK_THROWS_AS(plucker_residual(M, {0}, {}, {1, 2}), ContractError);
}

TEST_CASE("plucker_residual on a 3x6 polynomial matrix") {
    auto R = PolyRing::standard(F, 5);
    FieldRng rng(2, F);
    PolyMatrix M = poly_matrix(R, 3, 6);
    for (auto& row : M)
        for (auto& e : row) e = rng.form(R, 1);
    std::vector<std::size_t> a{4}, b{2}, c{0, 1, 3, 5};
    CHECK(plucker_residual(M, a, b, c).is_zero());
    CHECK(plucker_oracle(M, a, b, c).is_zero());
    CHECK(!plucker_residual(M, a, b, c, true).is_zero());
}

TEST_CASE("plucker_residual vanishes on random selections") {
    auto R = PolyRing::standard(F, 5);
    FieldRng rng(3, F);
    for (int t = 0; t < 200; ++t) {
        std::size_t m = 2 + rng.index(2);
        std::size_t na = rng.index(m), nb = rng.index(m - na);
        std::size_t nc = 2 * m - na - nb;
        std::size_t ncols = na + nc + rng.index(9 - na - nc);
        PolyMatrix M = const_matrix(R, rng.matrix(m, ncols));
        std::vector<std::size_t> pool(ncols);
        std::iota(pool.begin(), pool.end(), 0);
        for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.index(i)]);
        std::vector<std::size_t> a = take(pool, na), c = take(pool, nc);
        std::sort(c.begin(), c.end());
        std::vector<std::size_t> b;
        for (std::size_t i = 0; i < nb; ++i) b.push_back(rng.index(ncols));
        Polynomial r = plucker_residual(M, a, b, c);
        CHECK(r.is_zero());
        CHECK(r == plucker_oracle(M, a, b, c));
    }
}

TEST_CASE("is_nzd_mod examples") {
    auto R = PolyRing::standard(F, 5);
    auto P = [&](const char* s) { return parse_poly(s, R); };
    CHECK(is_nzd_mod(P("x0"), Ideal(R, {P("x1")})));
    CHECK(!is_nzd_mod(P("x0"), Ideal(R, {P("x0*x1")})));
    CHECK(is_nzd_mod(P("x0"), Ideal(R, {})));
    CHECK_THROWS_AS(is_nzd_mod(Polynomial(R), Ideal(R, {P("x1")})), ContractError);
}

TEST_CASE("make_koszul_type fixed point") {
    auto R = PolyRing::standard(F, 5);
    auto P = [&](const char* s) { return parse_poly(s, R); };
    PolyMatrix alpha{{P("x0"), Polynomial(R)}, {Polynomial(R), P("x1")}};
    PolyMatrix beta{{P("x2"), Polynomial(R)}, {Polynomial(R), P("x3")}};
    SymmetricTableau T(R, alpha, beta, true);
    CHECK(koszul_type_witnesses(T).ok());
    BaseChangeCert cert = make_koszul_type(T);
    CHECK(cert.moves.empty());
    CHECK(cert.output == T);
    CHECK(verify_certificate(T, cert));
}

TEST_CASE("make_koszul_type on a singular alpha") {
    for (std::uint64_t seed : {0u, 3u, 6u}) {
        SymmetricTableau T = sample_linear_pair(seed, 2 + static_cast<int>(seed % 2), F);
        CHECK(poly_det(T.alpha()).is_zero());
        BaseChangeCert cert = make_koszul_type(T, seed);
        CHECK(!cert.moves.empty());
        std::string why;
        CHECK_MESSAGE(verify_certificate(T, cert, &why), why);
        CHECK(!cert.det_alpha.is_zero());
        CHECK(is_nzd_mod(cert.det_beta, Ideal(T.ring(), {cert.det_alpha})));
        CHECK(koszul_type_witnesses(cert.output).ok());
        SymmetricTableau cur = T;
        for (const auto& m : cert.moves) {
            cur = apply_op(cur, m);
            CHECK(check_symmetry(cur.alpha(), cur.beta(), true).ok);
        }
        CHECK(cur == cert.output);
        int k = static_cast<int>(T.size());
        CHECK(ideal_equal(saturate(fitting_ideal(T.matrix(), k, T.ring())),
                          saturate(fitting_ideal(cert.output.matrix(), k, T.ring()))));
    }
}

TEST_CASE("make_koszul_type on every sample family") {
    for (std::uint64_t seed = 0; seed < 6; ++seed)
        for (int k = 1; k <= 3; ++k) {
            SymmetricTableau T = sample_linear_pair(seed, k, F);
            BaseChangeCert cert = make_koszul_type(T, seed);
            CHECK(verify_certificate(T, cert));
            CHECK(koszul_type_witnesses(cert.output).ok());
        }
}

TEST_CASE("make_koszul_type refuses alpha = beta") {
    auto R = PolyRing::standard(F, 5);
    auto P = [&](const char* s) { return parse_poly(s, R); };
    PolyMatrix alpha{{P("x0"), P("x1")}, {P("x1"), P("x2")}};
    SymmetricTableau T(R, alpha, alpha, true);
    CHECK_THROWS_AS(make_koszul_type(T, 0, 8), BudgetExceeded);
}

TEST_CASE("certificates are rejected when tampered with") {
    SymmetricTableau T = sample_linear_pair(0, 2, F);
    BaseChangeCert cert = make_koszul_type(T);
    BaseChangeCert bad = cert;
    bad.moves.clear();
    CHECK(!verify_certificate(T, bad));
}
