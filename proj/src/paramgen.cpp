#include "symcanon/paramgen.hpp"

#include <algorithm>

#include "symcanon/random.hpp"

namespace symcanon {

const std::array<const char*, 22>& ParameterPoint::linear_names() {
    static const std::array<const char*, 22> n{"a2",  "a3",  "a4",  "b2",  "b3",  "b4",  "L13", "L14",
                                               "L15", "L34", "L35", "L45", "M12", "M13", "M15", "M23",
                                               "M25", "M35", "M14", "M24", "M34", "M45"};
    return n;
}

const std::array<const char*, 3>& ParameterPoint::quadric_names() {
    static const std::array<const char*, 3> n{"P24", "Q13", "P13"};
    return n;
}

const std::array<const char*, 6>& ParameterPoint::scalar_names() {
    static const std::array<const char*, 6> n{"S12", "S13", "S14", "S23", "S24", "S34"};
    return n;
}

namespace {

template <std::size_t K>
std::size_t name_index(const std::array<const char*, K>& names, const std::string& name) {
    for (std::size_t i = 0; i < K; ++i)
        if (name == names[i]) return i;
    throw ContractError("unknown parameter '" + name + "'");
}

std::size_t linear_rank(const std::vector<Polynomial>& forms) { return rank(coeff_matrix(forms, 1)); }

std::string seq_name(const char* text) { return std::string("(") + text + ")"; }

}  // namespace

const Polynomial& ParameterPoint::lin(const std::string& name) const { return linear.at(name_index(linear_names(), name)); }
const Polynomial& ParameterPoint::quad(const std::string& name) const { return quadric.at(name_index(quadric_names(), name)); }
const mpq_class& ParameterPoint::scal(const std::string& name) const { return scalar.at(name_index(scalar_names(), name)); }

std::vector<mpq_class> ParameterPoint::coordinates() const {
    std::vector<mpq_class> c;
    auto push = [&](const Polynomial& f, int d) {
        for (const auto& m : graded_basis(ring->nvars(), d)) c.push_back(f.coefficient(m));
    };
    for (const auto& f : linear) push(f, 1);
    for (const auto& f : quadric) push(f, 2);
    for (const auto& s : scalar) c.push_back(s);
    return c;
}

bool ParameterPoint::operator==(const ParameterPoint& o) const {
    return linear == o.linear && quadric == o.quadric && scalar == o.scalar;
}

ParameterPoint sample(std::uint64_t seed, const FieldSpec& field) {
    ParameterPoint p;
    p.ring = PolyRing::standard(field);
    FieldRng rng(seed, field, 3);
    for (std::size_t i = 0; i < ParameterPoint::linear_names().size(); ++i) p.linear.push_back(rng.form(p.ring, 1));
    for (std::size_t i = 0; i < ParameterPoint::quadric_names().size(); ++i) p.quadric.push_back(rng.form(p.ring, 2));
    for (std::size_t i = 0; i < ParameterPoint::scalar_names().size(); ++i) p.scalar.push_back(rng.element());
    return p;
}

NormalFormSequences normal_form_sequences(const SymmetricTableau& T) {
    if (T.n() != 2) throw ContractError("normal form sequences need n = 2");
    const auto& al = T.alpha();
    const auto& be = T.beta();
    const Polynomial &a2 = al[1][1], &a3 = al[1][2], &b2 = be[1][1], &b3 = be[1][2], &a4 = al[2][0], &b4 = be[2][0];
    return {{a2, a3, b2, b3}, {a4, -a2, b4, -b2}, {a4, a3, b4, b3}, {a4, -a2, a3, b4, b3}, {a4, a3, b4, b2, b3}};
}

Realization realize_detailed(const ParameterPoint& p) {
    const RingPtr& R = p.ring;
    const FieldSpec& F = R->field();
    Polynomial a2 = p.lin("a2"), a3 = p.lin("a3"), a4 = p.lin("a4");
    Polynomial b2 = p.lin("b2"), b3 = p.lin("b3"), b4 = p.lin("b4");

    if (linear_rank({a2, a3, b2, b3}) < 4) throw ContractError("regularity precondition failed for " + seq_name("a2,a3,b2,b3"));
    if (linear_rank({a4, a2, b4, b2}) < 4) throw ContractError("regularity precondition failed for " + seq_name("a4,-a2,b4,-b2"));
    if (linear_rank({a4, a3, b4, b3}) < 4) throw ContractError("regularity precondition failed for " + seq_name("a4,a3,b4,b3"));
    std::string repair;
    if (linear_rank({a4, a2, a3, b4, b3}) < 5) {
        a2 += b2;
        repair = "a2 -> a2 + b2";
    }
    if (linear_rank({a4, a3, b4, b2, b3}) < 5) {
        b2 += a2;
        repair += repair.empty() ? "b2 -> b2 + a2" : "; b2 -> b2 + a2";
    }
    if (linear_rank({a4, a2, a3, b4, b3}) < 5)
        throw ContractError("regularity precondition failed for " + seq_name("a4,-a2,a3,b4,b3") + " after repair");
    if (linear_rank({a4, a3, b4, b2, b3}) < 5)
        throw ContractError("regularity precondition failed for " + seq_name("a4,a3,b4,b2,b3") + " after repair");
    if (linear_rank({a2, a3, b2, b3}) < 4 || linear_rank({a4, a2, b4, b2}) < 4)
        throw ContractError("regularity precondition failed after repair");

    // Scalars S (4x4 skew) and u = (a4, a3, b4, b3).
    Matrix S(F, 4, 4);
    {
        std::size_t k = 0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t s = r + 1; s < 4; ++s) {
                S.at(r, s) = F.reduce(p.scalar[k++]);
                S.at(s, r) = F.neg(S.at(r, s));
            }
    }
    std::vector<Polynomial> u{a4, a3, b4, b3};
    std::vector<Polynomial> Su;
    for (std::size_t r = 0; r < 4; ++r) {
        Polynomial acc(R);
        for (std::size_t s = 0; s < 4; ++s)
            if (S.at(r, s) != 0) acc += u[s].scale(S.at(r, s));
        Su.push_back(acc);
    }

    auto skew5 = [&]() { return poly_matrix(R, 5, 5); };
    auto put = [](PolyMatrix& X, std::size_t i, std::size_t j, const Polynomial& v) {
        X[i][j] = v;
        X[j][i] = -v;
    };
    PolyMatrix M = skew5();
    put(M, 0, 1, p.lin("M12"));
    put(M, 0, 2, p.lin("M13"));
    put(M, 0, 4, p.lin("M15"));
    put(M, 1, 2, p.lin("M23"));
    put(M, 1, 4, p.lin("M25"));
    put(M, 2, 4, p.lin("M35"));
    put(M, 0, 3, p.lin("M14"));
    put(M, 1, 3, p.lin("M24"));
    put(M, 2, 3, p.lin("M34"));
    put(M, 3, 4, p.lin("M45"));

    PolyMatrix L = skew5();
    put(L, 0, 2, p.lin("L13"));
    put(L, 0, 3, p.lin("L14"));
    put(L, 0, 4, p.lin("L15"));
    put(L, 2, 3, p.lin("L34"));
    put(L, 2, 4, p.lin("L35"));
    put(L, 3, 4, p.lin("L45"));
    put(L, 0, 1, p.lin("M14") - Su[0]);
    put(L, 1, 2, Su[1] - p.lin("M24"));
    put(L, 1, 3, Su[2] - p.lin("M34"));
    put(L, 1, 4, Su[3] + p.lin("M45"));

    std::vector<Polynomial> abar{a4, -a2, a3, b4, b3}, abarp{a4, a3, b4, b2, b3};
    auto apply = [&](const PolyMatrix& X, const std::vector<Polynomial>& v) {
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Polynomial acc(R);
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!X[i][j].is_zero()) acc += X[i][j] * v[j];
            out.push_back(acc);
        }
        return out;
    };
    auto La = apply(L, abar);
    auto Ma = apply(M, abarp);
    if (La[1] != Ma[3]) throw std::logic_error("realize: the two expressions for P13 + Q24 disagree");

    const Polynomial& X = La[1];
    Polynomial P13 = p.quad("P13"), P24 = p.quad("P24"), Q13 = p.quad("Q13");
    PolyMatrix P = poly_matrix(R, 4, 4), Q = poly_matrix(R, 4, 4);
    put(Q, 0, 3, La[0]);
    put(P, 1, 2, -La[2]);
    put(Q, 2, 3, La[3]);
    put(P, 2, 3, La[4]);
    put(Q, 0, 1, Ma[0]);
    put(P, 0, 1, Ma[1]);
    put(Q, 1, 2, -Ma[2]);
    put(P, 0, 3, Ma[4]);
    put(P, 0, 2, P13);
    put(Q, 1, 3, X - P13);
    put(P, 1, 3, P24);
    put(Q, 0, 2, Q13);

    auto W1 = apply(P, {a2, a3, b2, b3});
    auto W2 = apply(Q, {a4, -a2, b4, -b2});
    Realization out{SymmetricTableau(R, {{Polynomial(R)}}, {{Polynomial(R)}}, true), P, Q, L, M, S, repair,
                    W1[2], W2[3], -W1[0], -W2[1]};
    if (out.A2_from_P != out.A2_from_Q || out.B2_from_P != out.B2_from_Q)
        throw std::logic_error("realize: A2/B2 from the P and Q witnesses disagree");
    Polynomial A1 = W2[2], A2 = W1[2], A3 = W1[3];
    Polynomial B1 = -W2[0], B2 = -W1[0], B3 = -W1[1];
    Polynomial z(R);
    PolyMatrix alpha{{A1, A2, A3}, {z, a2, a3}, {a4, -a2, z}};
    PolyMatrix beta{{B1, B2, B3}, {z, b2, b3}, {b4, -b2, z}};
    out.tableau = SymmetricTableau(R, std::move(alpha), std::move(beta));
    return out;
}

SymmetricTableau realize(const ParameterPoint& p) { return realize_detailed(p).tableau; }

DimensionLedger ledger(std::uint64_t seed, const FieldSpec& field) {
    ParameterPoint p = sample(seed, field);
    SymmetricTableau T = realize(p);
    auto seqs = normal_form_sequences(T);
    DimensionLedger d;
    d.dim_P = static_cast<long>(p.coordinates().size());
    d.ker_d1 = ambiguity_dim(RegularSequence::make(seqs.v1), 4);
    d.ker_d1_prime = ambiguity_dim(RegularSequence::make(seqs.v2), 4);
    d.ker_D1 = ambiguity_dim(RegularSequence::make(seqs.abar), 3);
    d.ker_D1_prime = ambiguity_dim(RegularSequence::make(seqs.abar_prime), 3);
    long nv = p.ring->nvars();
    d.dim_G = nv * nv - 1;
    // diag(s1, s2, s2) with two quadric entries in the first row.
    d.dim_H = 2 + 2 * static_cast<long>(graded_basis(static_cast<int>(nv), 2).size());
    // Lie algebra of the pattern group: X J + J X^t = 0 on the 12-parameter pattern.
    const std::size_t N = 3;
    Matrix J = symplectic_form(field, N);
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < 2 * N; ++i) {
        Matrix X(field, 2 * N, 2 * N);
        X.at(i, i) = 1;
        gens.push_back(X);
    }
    for (std::size_t i = 0; i < N; ++i) {
        Matrix X(field, 2 * N, 2 * N);
        X.at(i, N + i) = 1;
        gens.push_back(X);
        Matrix Y(field, 2 * N, 2 * N);
        Y.at(N + i, i) = 1;
        gens.push_back(Y);
    }
    Matrix lin(field, 4 * N * N, gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Matrix C = gens[k] * J + J * gens[k].transpose();
        for (std::size_t r = 0; r < 2 * N; ++r)
            for (std::size_t c = 0; c < 2 * N; ++c) lin.at(r * 2 * N + c, k) = C.at(r, c);
    }
    d.dim_L = static_cast<long>(gens.size() - rank(lin));
    d.result = d.dim_P - d.ker_d1 - d.ker_d1_prime - d.ker_D1 - d.ker_D1_prime - d.dim_G - d.dim_H - d.dim_L;
    return d;
}

SymmetricTableau sample_k10(std::uint64_t seed, const FieldSpec& field) {
    RingPtr R = PolyRing::standard(field);
    FieldRng rng(seed, field, 3);
    for (;;) {
        std::vector<Polynomial> v;
        for (int i = 0; i < 4; ++i) v.push_back(rng.form(R, 1));
        PolyMatrix S = poly_matrix(R, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                S[i][j] = rng.form(R, 2);
                S[j][i] = -S[i][j];
            }
        if (linear_rank(v) < 4) continue;
        std::vector<Polynomial> W(4, Polynomial(R));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (!S[i][j].is_zero()) W[i] += S[i][j] * v[j];
        PolyMatrix alpha{{W[0], W[1]}, {v[2], v[3]}};
        PolyMatrix beta{{-W[2], -W[3]}, {v[0], v[1]}};
        return SymmetricTableau(R, std::move(alpha), std::move(beta));
    }
}

Matrix random_symplectic(const FieldSpec& field, std::size_t N, std::uint64_t seed, int moves) {
    FieldRng rng(seed, field, 3);
    Matrix S = Matrix::identity(field, 2 * N);
    for (int k = 0; k < moves; ++k) {
        int mu = static_cast<int>(rng.index(N));
        int nu = static_cast<int>(rng.index(N));
        if (N > 1)
            while (nu == mu) nu = static_cast<int>(rng.index(N));
        OpMove m;
        switch (rng.index(N > 1 ? 5 : 2)) {
            case 0: m = OpMove::add_col_same(rng.nonzero(), mu, rng.index(2) == 1); break;
            case 1: m = OpMove::rotate(mu); break;
            case 2: m = OpMove::add_col_pair(rng.nonzero(), mu, nu, rng.index(2) == 1); break;
            case 3: m = OpMove::transfer(rng.nonzero(), mu, nu); break;
            default: m = OpMove::swap(mu, nu); break;
        }
        S = m.symplectic(field, N) * S;
    }
    return S;
}

JacobianCheck quadric_jacobian_check(int n, std::uint64_t seed, const FieldSpec& field) {
    if (n < 1 || n > 4) throw ContractError("quadric_jacobian_check supports 1 <= n <= 4");
    JacobianCheck out;
    std::size_t nn = static_cast<std::size_t>(n), N = nn + 1;
    out.quadrics = n * (n - 1) / 2;
    out.dim_Ms_formula = n * (n + 1) + (n + 1) * (n + 2) / 2 - 2;
    long fibre_total = (n - 1) * (n + 2) + (n + 1) * (n + 2) / 2 - 4;
    out.codim_delta = out.dim_Ms_formula - fibre_total;
    FieldRng rng(seed, field, 3);
    for (int attempt = 0; attempt < 16; ++attempt) {
        ScalarTableau base{Matrix(field, nn, N), Matrix(field, nn, N)};
        for (std::size_t i = 0; i < nn; ++i) base.a.at(i, i) = 1;
        ScalarTableau M = apply_op(base, OpMove::rows(rng.invertible(nn)));
        M = apply_symplectic(M, random_symplectic(field, N, rng.raw()));
        if (!scalar_symmetric(M)) throw std::logic_error("sampled point is not symmetric");
        if (rank(M.joined()) < nn) {
            ++out.resamples;
            continue;
        }
        // Columns: a_{ik} at i*N + k, b_{ik} at nN + i*N + k.
        std::size_t rows = static_cast<std::size_t>(out.quadrics);
        Matrix Jac(field, rows, 2 * nn * N);
        std::size_t r = 0;
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = i + 1; j < nn; ++j, ++r)
                for (std::size_t k = 0; k < N; ++k) {
                    // q_ij = sum_k a_ik b_jk - b_ik a_jk
                    Jac.at(r, i * N + k) = field.add(Jac.at(r, i * N + k), M.b.at(j, k));
                    Jac.at(r, j * N + k) = field.sub(Jac.at(r, j * N + k), M.b.at(i, k));
                    Jac.at(r, nn * N + j * N + k) = field.add(Jac.at(r, nn * N + j * N + k), M.a.at(i, k));
                    Jac.at(r, nn * N + i * N + k) = field.sub(Jac.at(r, nn * N + i * N + k), M.a.at(j, k));
                }
        out.jacobian_rank = rows ? rank(Jac) : 0;
        out.dim_Ms_tangent = static_cast<long>(2 * nn * N) - 1 - static_cast<long>(out.jacobian_rank);
        out.ok = out.jacobian_rank == rows && out.dim_Ms_tangent == out.dim_Ms_formula;
        return out;
    }
    throw BudgetExceeded("quadric_jacobian_check: no smooth sample point in 16 attempts");
}

}  // namespace symcanon
