#include "symcanon/normalform.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace symcanon {

namespace {

using Vec = std::vector<mpq_class>;

mpq_class omega(const FieldSpec& F, const Vec& x, const Vec& y) {
    std::size_t N = x.size() / 2;
    mpq_class acc = 0;
    for (std::size_t i = 0; i < N; ++i) acc = F.add(acc, F.sub(F.mul(x[i], y[N + i]), F.mul(x[N + i], y[i])));
    return acc;
}

// Row of the linear functional y -> omega(w, y).
Vec omega_row(const FieldSpec& F, const Vec& w) {
    std::size_t N = w.size() / 2;
    Vec r(2 * N, 0);
    for (std::size_t i = 0; i < N; ++i) {
        r[N + i] = w[i];
        r[i] = F.neg(w[N + i]);
    }
    return r;
}

Matrix rows_matrix(const FieldSpec& F, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(F, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// y with omega(w, y) = rhs_w for each constraint w.
Vec solve_omega(const FieldSpec& F, const std::vector<Vec>& ws, const Vec& rhs, std::size_t dim) {
    std::vector<Vec> rows;
    for (const auto& w : ws) rows.push_back(omega_row(F, w));
    auto y = solve(rows_matrix(F, rows, dim), rhs);
    if (!y) throw std::logic_error("symplectic completion: inconsistent constraints");
    return *y;
}

// Columns (e_1..e_N, f_1..f_N) of a symplectic basis whose first vectors
// are the given isotropic, independent vectors.
Matrix complete_symplectic_basis(const FieldSpec& F, std::size_t N, const std::vector<Vec>& iso) {
    std::size_t dim = 2 * N, k = iso.size();
    std::vector<Vec> E = iso, Fv;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Vec> ws;
        Vec rhs;
        for (std::size_t j = 0; j < k; ++j) {
            ws.push_back(iso[j]);
            rhs.push_back(i == j ? 1 : 0);
        }
        for (const auto& f : Fv) {
            ws.push_back(f);
            rhs.push_back(0);
        }
        Fv.push_back(solve_omega(F, ws, rhs, dim));
    }
    while (E.size() < N) {
        std::vector<Vec> ws;
        for (const auto& e : E) ws.push_back(omega_row(F, e));
        for (const auto& f : Fv) ws.push_back(omega_row(F, f));
        auto comp = kernel(rows_matrix(F, ws, dim));
        if (comp.empty()) throw std::logic_error("symplectic completion: empty complement");
        Vec x = comp.front();
        std::vector<Vec> cons = E;
        cons.insert(cons.end(), Fv.begin(), Fv.end());
        cons.push_back(x);
        Vec rhs(cons.size(), 0);
        rhs.back() = 1;
        Fv.push_back(solve_omega(F, cons, rhs, dim));
        E.push_back(x);
    }
    Matrix B(F, dim, dim);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t r = 0; r < dim; ++r) {
            B.at(r, i) = E[i][r];
            B.at(r, N + i) = Fv[i][r];
        }
    Matrix J = symplectic_form(F, N);
    if (B.transpose() * J * B != J) throw std::logic_error("symplectic completion failed its check");
    return B;
}

// ---- univariate arithmetic over GF(P), low degree first ----

using u64 = std::uint64_t;
using UPoly = std::vector<u64>;

struct ModArith {
    u64 P;

    u64 add(u64 a, u64 b) const { return (a + b) % P; }
    u64 sub(u64 a, u64 b) const { return (a + P - b) % P; }
    u64 mul(u64 a, u64 b) const { return (a * b) % P; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        for (a %= P; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    u64 inv(u64 a) const { return pow(a, P - 2); }
    u64 from(const mpq_class& q) const {
        mpz_class p(static_cast<unsigned long>(P));
        mpz_class n = q.get_num() % p, d = q.get_den() % p;
        if (n < 0) n += p;
        if (d == 0) throw ContractError("coefficient denominator vanishes modulo the reduction prime");
        return mul(n.get_ui(), inv(d.get_ui()));
    }
    void trim(UPoly& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    UPoly mulp(const UPoly& a, const UPoly& b) const {
        if (a.empty() || b.empty()) return {};
        UPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
        trim(r);
        return r;
    }
    UPoly subp(UPoly a, const UPoly& b) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
        trim(a);
        return a;
    }
    void divmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) const {
        trim(a);
        q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
        u64 lead = inv(b.back());
        while (a.size() >= b.size()) {
            u64 c = mul(a.back(), lead);
            std::size_t sh = a.size() - b.size();
            q[sh] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = sub(a[sh + i], mul(c, b[i]));
            trim(a);
        }
        r = a;
    }
    UPoly modp(const UPoly& a, const UPoly& b) const {
        UPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    UPoly monic(UPoly a) const {
        if (a.empty()) return a;
        u64 l = inv(a.back());
        for (auto& c : a) c = mul(c, l);
        return a;
    }
    UPoly gcd(UPoly a, UPoly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            UPoly r = modp(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    UPoly powmod(UPoly base, u64 e, const UPoly& m) const {
        UPoly r{1};
        base = modp(base, m);
        for (; e; e >>= 1) {
            if (e & 1) r = modp(mulp(r, base), m);
            base = modp(mulp(base, base), m);
        }
        return r;
    }
    // Roots of a monic product of distinct linear factors.
    void split(const UPoly& h, std::mt19937_64& rng, std::vector<u64>& out) const {
        std::size_t d = h.size() - 1;
        if (d == 0) return;
        if (d == 1) {
            out.push_back(sub(0, h[0]));
            return;
        }
        for (int tries = 0; tries < 200; ++tries) {
            UPoly w = powmod(UPoly{rng() % P, 1}, (P - 1) / 2, h);
            w = subp(w, UPoly{1});
            UPoly g = gcd(h, w);
            if (g.size() > 1 && g.size() < h.size()) {
                UPoly q, r;
                divmod(h, g, q, r);
                split(g, rng, out);
                split(monic(q), rng, out);
                return;
            }
        }
        throw BudgetExceeded("root splitting did not converge");
    }
};

UPoly poly_det(const ModArith& M, const std::vector<std::vector<UPoly>>& m, std::vector<std::size_t> cols, std::size_t row) {
    if (cols.empty()) return UPoly{1};
    UPoly acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const UPoly& e = m[row][cols[k]];
        if (e.empty()) continue;
        std::vector<std::size_t> rest = cols;
        rest.erase(rest.begin() + static_cast<long>(k));
        UPoly t = M.mulp(e, poly_det(M, m, rest, row + 1));
        if (k % 2) acc = M.subp(acc, t);
        else acc = M.subp(acc, M.subp(UPoly{}, t));
    }
    return acc;
}

std::optional<std::pair<mpz_class, mpz_class>> rational_reconstruct(u64 s, u64 P) {
    long long bound = static_cast<long long>(std::sqrt(static_cast<double>(P) / 2.0));
    long long r0 = static_cast<long long>(P), r1 = static_cast<long long>(s), t0 = 0, t1 = 1;
    while (r1 > bound) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || std::llabs(t1) > bound) return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    return std::make_pair(mpz_class(static_cast<long>(r1)), mpz_class(static_cast<long>(t1)));
}

std::vector<Polynomial> linear_row(const SymmetricTableau& T, std::size_t i) {
    std::vector<Polynomial> r;
    for (std::size_t j = 0; j < 2 * T.size(); ++j) r.push_back(T.entry(i, j));
    return r;
}

std::vector<Polynomial> combine(const std::vector<Polynomial>& r1, const std::vector<Polynomial>& r2, const Vec& c) {
    std::vector<Polynomial> out;
    for (std::size_t j = 0; j < r1.size(); ++j) out.push_back(r1[j].scale(c[0]) + r2[j].scale(c[1]));
    return out;
}

std::size_t linear_rank(const std::vector<Polynomial>& r) { return rank(coeff_matrix(r, 1)); }

// Generalized rows c (up to scale) whose entries cut out a single point.
std::vector<Vec> generalized_rows(const std::vector<Polynomial>& r1, const std::vector<Polynomial>& r2) {
    const FieldSpec& F = r1[0].ring()->field();
    const int nv = r1[0].ring()->nvars();
    ModArith M{F.is_prime_field() ? F.characteristic() : 2147483647ULL};
    Matrix C1 = coeff_matrix(r1, 1), C2 = coeff_matrix(r2, 1);
    std::size_t ne = r1.size(), nm = static_cast<std::size_t>(nv);
    std::vector<std::vector<UPoly>> E(ne, std::vector<UPoly>(nm));
    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            UPoly p{M.from(C1.at(i, j)), M.from(C2.at(i, j))};
            M.trim(p);
            E[i][j] = p;
        }
    // rank <= nv - 1 of the (ne x nv) pencil: gcd of the maximal minors.
    UPoly g;
    std::vector<std::size_t> allcols(nm);
    for (std::size_t j = 0; j < nm; ++j) allcols[j] = j;
    std::vector<std::size_t> rowsel(nm);
    std::vector<bool> pick(ne, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(nm), true);
    do {
        std::vector<std::vector<UPoly>> sub;
        for (std::size_t i = 0; i < ne; ++i)
            if (pick[i]) sub.push_back(E[i]);
        g = M.gcd(g, poly_det(M, sub, allcols, 0));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (g.empty()) throw ContractError("the linear rows drop rank along a curve");
    std::vector<Vec> out;
    if (g.size() > 1) {
        UPoly xp = M.powmod(UPoly{0, 1}, M.P, g);
        UPoly h = M.gcd(g, M.subp(xp, UPoly{0, 1}));
        std::mt19937_64 rng(0x6e0f11);
        std::vector<u64> roots;
        if (h.size() > 1) M.split(h, rng, roots);
        std::sort(roots.begin(), roots.end());
        std::vector<Vec> finite;
        for (u64 s : roots) {
            Vec c;
            if (F.is_prime_field()) c = {1, mpq_class(static_cast<unsigned long>(s))};
            else {
                auto uv = rational_reconstruct(s, M.P);
                if (!uv) throw ContractError("a generalized row is not defined over Q within the reconstruction bound");
                c = {1, mpq_class(uv->first, uv->second)};
            }
            if (linear_rank(combine(r1, r2, c)) != nm - 1)
                throw ContractError("a generalized row is not defined over the base field");
            finite.push_back(c);
        }
        std::sort(finite.begin(), finite.end(), [](const Vec& a, const Vec& b) { return a[1] < b[1]; });
        out = finite;
    }
    if (linear_rank(r2) == nm - 1) out.push_back({0, 1});
    return out;
}

std::vector<Vec> kernel_plane(const std::vector<Polynomial>& r) {
    auto K = kernel(coeff_matrix(r, 1).transpose());
    if (K.size() != 2) throw std::logic_error("generalized row kernel is not a plane");
    return K;
}

std::string dump(const SymmetricTableau& T) {
    std::ostringstream os;
    for (std::size_t i = 0; i < T.size(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < 2 * T.size(); ++j) os << (j ? ", " : "") << T.entry(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

}  // namespace

OrbitReduction scalar_orbit_reduce(const ScalarTableau& M) {
    if (!scalar_symmetric(M)) throw ContractError("asymmetric input: a*b^t != b*a^t");
    const FieldSpec& F = M.a.field();
    std::size_t n = M.a.rows(), N = M.a.cols();
    Matrix joined = M.joined();
    Matrix aug(F, n, 2 * N + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < 2 * N; ++j) aug.at(i, j) = joined.at(i, j);
        aug.at(i, 2 * N + i) = 1;
    }
    RrefResult rr = rref(aug);
    std::size_t k = 0;
    for (auto p : rr.pivots)
        if (p < 2 * N) ++k;
    Matrix left(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) left.at(i, j) = rr.reduced.at(i, 2 * N + j);
    std::vector<Vec> iso;
    for (std::size_t i = 0; i < k; ++i) {
        Vec v(2 * N);
        for (std::size_t j = 0; j < 2 * N; ++j) v[j] = rr.reduced.at(i, j);
        iso.push_back(v);
    }
    Matrix B = complete_symplectic_basis(F, N, iso);
    Matrix right = inverse(B)->transpose();

    OrbitReduction out;
    out.cls.k = static_cast<int>(k);
    out.cls.r = static_cast<int>(rank(M.a));
    out.cls.s = out.cls.k - out.cls.r;
    out.left = left;
    out.right = right;
    out.canonical = ScalarTableau{Matrix(F, n, N), Matrix(F, n, N)};
    for (std::size_t i = 0; i < k; ++i) out.canonical.a.at(i, i) = 1;
    if (left * joined * right != out.canonical.joined()) throw std::logic_error("orbit reduction: canonical form mismatch");
    auto li = inverse(left);
    auto ri = inverse(right);
    if (!li || !ri || *li * out.canonical.joined() * *ri != joined || !is_symplectic(right))
        throw std::logic_error("orbit reduction: witness factorization failed");
    return out;
}

std::vector<OpMove> decompose_symplectic(const Matrix& S) {
    const FieldSpec& F = S.field();
    std::size_t N = S.rows() / 2;
    if (S.rows() != 2 * N || S.cols() != 2 * N || !is_symplectic(S)) throw ContractError("matrix is not symplectic");
    std::vector<OpMove> moves;
    // S = X * R with R a product of rotations and X having an invertible alpha block.
    Matrix X;
    std::size_t mask = 0;
    for (; mask < (std::size_t(1) << N); ++mask) {
        Matrix R = Matrix::identity(F, 2 * N);
        for (std::size_t m = 0; m < N; ++m)
            if (mask >> m & 1) R = OpMove::rotate(static_cast<int>(m)).symplectic(F, N) * R;
        X = S * *inverse(R);
        std::vector<std::size_t> idx(N);
        for (std::size_t i = 0; i < N; ++i) idx[i] = i;
        if (determinant(X.submatrix(idx, idx)) != 0) break;
    }
    if (mask == (std::size_t(1) << N)) throw std::logic_error("no rotation pattern gives an invertible block");
    for (std::size_t m = 0; m < N; ++m)
        if (mask >> m & 1) moves.push_back(OpMove::rotate(static_cast<int>(m)));

    std::vector<std::size_t> lo(N), hi(N);
    for (std::size_t i = 0; i < N; ++i) {
        lo[i] = i;
        hi[i] = N + i;
    }
    Matrix A = X.submatrix(lo, lo), Bb = X.submatrix(lo, hi), C = X.submatrix(hi, lo);
    Matrix Ai = *inverse(A);
    Matrix Y = Ai * Bb, Z = C * Ai;
    auto add_sym = [&](const Matrix& W, bool swapped) {
        for (std::size_t m = 0; m < N; ++m) {
            if (W.at(m, m) != 0) moves.push_back(OpMove::add_col_same(W.at(m, m), static_cast<int>(m), swapped));
            for (std::size_t v = m + 1; v < N; ++v)
                if (W.at(m, v) != 0)
                    moves.push_back(OpMove::add_col_pair(W.at(m, v), static_cast<int>(m), static_cast<int>(v), swapped));
        }
    };
    add_sym(Y, false);

    // Gauss-Jordan on A: F_k ... F_1 A = I; the moves are F_k^-1, ..., F_1^-1.
    std::vector<std::vector<OpMove>> inverse_steps;
    Matrix W = A;
    for (std::size_t j = 0; j < N; ++j) {
        std::size_t p = j;
        while (W.at(p, j) == 0) ++p;
        if (p != j) {
            for (std::size_t c = 0; c < N; ++c) std::swap(W.at(p, c), W.at(j, c));
            inverse_steps.push_back({OpMove::swap(static_cast<int>(p), static_cast<int>(j))});
        }
        mpq_class piv = W.at(j, j);
        if (piv != 1) {
            mpq_class c = F.inv(piv);
            for (std::size_t col = 0; col < N; ++col) W.at(j, col) = F.mul(W.at(j, col), c);
            // Inverse scales by d = piv: diag(d, 1/d) in the plane of column j.
            mpq_class d = piv;
            int m = static_cast<int>(j);
            inverse_steps.push_back({OpMove::add_col_same(F.neg(1), m), OpMove::add_col_same(1, m, true),
                                     OpMove::add_col_same(F.neg(1), m), OpMove::add_col_same(d, m),
                                     OpMove::add_col_same(F.neg(F.inv(d)), m, true), OpMove::add_col_same(d, m)});
        }
        for (std::size_t r = 0; r < N; ++r) {
            if (r == j || W.at(r, j) == 0) continue;
            mpq_class lam = F.neg(W.at(r, j));
            for (std::size_t col = 0; col < N; ++col) W.at(r, col) = F.add(W.at(r, col), F.mul(lam, W.at(j, col)));
            inverse_steps.push_back({OpMove::transfer(F.neg(lam), static_cast<int>(r), static_cast<int>(j))});
        }
    }
    for (auto it = inverse_steps.rbegin(); it != inverse_steps.rend(); ++it) moves.insert(moves.end(), it->begin(), it->end());
    add_sym(Z, true);

    Matrix prod = Matrix::identity(F, 2 * N);
    for (const auto& m : moves) prod = m.symplectic(F, N) * prod;
    if (prod != S) throw std::logic_error("symplectic decomposition failed its replay check");
    return moves;
}

ShapeReport verify_normal_shape(const PolyMatrix& alpha, const PolyMatrix& beta) {
    ShapeReport rep;
    if (alpha.size() != 3 || beta.size() != 3) {
        rep.violations.push_back({0, 0, "normal shape needs n = 2"});
        return rep;
    }
    auto zero = [&](const PolyMatrix& M, std::size_t i, std::size_t j, std::size_t off) {
        if (!M[i][j].is_zero())
            rep.violations.push_back({i + 1, off + j + 1, "expected 0, found " + M[i][j].to_string()});
    };
    zero(alpha, 1, 0, 0);
    zero(beta, 1, 0, 3);
    zero(alpha, 2, 2, 0);
    zero(beta, 2, 2, 3);
    if (alpha[2][1] != -alpha[1][1])
        rep.violations.push_back({3, 2, "expected -(" + alpha[1][1].to_string() + "), found " + alpha[2][1].to_string()});
    if (beta[2][1] != -beta[1][1])
        rep.violations.push_back({3, 5, "expected -(" + beta[1][1].to_string() + "), found " + beta[2][1].to_string()});
    SymmetryReport sym = check_symmetry(alpha, beta, true);
    if (!sym.ok) {
        std::size_t i = sym.failing ? sym.failing->first + 1 : 0, j = sym.failing ? sym.failing->second + 1 : 0;
        rep.violations.push_back({i, j, sym.layout_error.empty() ? "symmetry identity fails for rows " + std::to_string(i) + ", " + std::to_string(j)
                                                                 : sym.layout_error});
    }
    rep.ok = rep.violations.empty();
    return rep;
}

ShapeReport verify_normal_shape(const SymmetricTableau& T) { return verify_normal_shape(T.alpha(), T.beta()); }

NormalFormK11 reduce_k11(const SymmetricTableau& T) {
    if (T.n() != 2) throw ContractError("reduce_k11 needs n = 2");
    DegeneracyScheme ds = degeneracy_scheme(T);
    if (!ds.finite || !ds.reduced || ds.points != 3)
        throw ContractError("not three reduced points (finite=" + std::to_string(ds.finite) + ", reduced=" +
                            std::to_string(ds.reduced) + ", points=" + std::to_string(ds.points) + ")");
    if (verify_normal_shape(T).ok) return {T, {}, {{1, 0}, {0, 1}, {1, 1}}};

    const FieldSpec& F = T.ring()->field();
    auto r1 = linear_row(T, 1), r2 = linear_row(T, 2);
    auto cs = generalized_rows(r1, r2);
    if (cs.size() != 3)
        throw ContractError("not three reduced points: found " + std::to_string(cs.size()) + " point-defining generalized rows");
    const Vec &c1 = cs[0], &c2 = cs[1], &c3 = cs[2];
    // c3 = s c1 + t c2.
    Matrix sys = Matrix::from_rows(F, {{c1[0], c2[0]}, {c1[1], c2[1]}});
    auto st = solve(sys, {c3[0], c3[1]});
    if (!st || (*st)[0] == 0 || (*st)[1] == 0) throw std::logic_error("generalized rows are not pairwise independent");
    Matrix g = Matrix::identity(F, 3);
    for (std::size_t j = 0; j < 2; ++j) {
        g.at(1, 1 + j) = F.mul((*st)[0], c1[j]);
        g.at(2, 1 + j) = F.mul((*st)[1], c2[j]);
    }
    std::vector<OpMove> moves{OpMove::rows(g)};
    SymmetricTableau T1 = apply_op(T, moves.front());

    auto n1 = linear_row(T1, 1), n2 = linear_row(T1, 2);
    std::vector<Polynomial> n12;
    for (std::size_t j = 0; j < n1.size(); ++j) n12.push_back(n1[j] + n2[j]);
    // Kernel planes go to the coordinate planes of columns 0 (row 1), 1 (sum), 2 (row 2).
    std::vector<std::vector<Vec>> planes{kernel_plane(n1), kernel_plane(n12), kernel_plane(n2)};
    std::vector<Vec> xs, ys;
    for (const auto& K : planes) {
        mpq_class w = omega(F, K[0], K[1]);
        if (w == 0) throw std::logic_error("case exhausted: a kernel plane is isotropic\n" + dump(T1));
        Vec y = K[1];
        for (auto& c : y) c = F.div(c, w);
        xs.push_back(K[0]);
        ys.push_back(y);
    }
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            for (const auto& u : {xs[a], ys[a]})
                for (const auto& v : {xs[b], ys[b]})
                    if (omega(F, u, v) != 0)
                        throw std::logic_error("case exhausted: kernel planes are not orthogonal\n" + dump(T1));
    Matrix B(F, 6, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t r = 0; r < 6; ++r) {
            B.at(r, i) = xs[i][r];
            B.at(r, 3 + i) = ys[i][r];
        }
    Matrix S = B.transpose();
    auto col_moves = decompose_symplectic(S);
    moves.insert(moves.end(), col_moves.begin(), col_moves.end());
    SymmetricTableau out = apply_ops(T, moves);
    auto shape = verify_normal_shape(out);
    if (!shape.ok)
        throw std::logic_error("case exhausted: result misses the normal shape at (" + std::to_string(shape.violations[0].row) +
                               "," + std::to_string(shape.violations[0].col) + ")\n" + dump(out));
    return {out, moves, {c1, c2, c3}};
}

}  // namespace symcanon
