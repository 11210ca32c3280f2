#include "symcanon/tableau.hpp"

#include <map>

namespace symcanon {

PolyMatrix poly_matrix(const RingPtr& ring, std::size_t rows, std::size_t cols) {
    return PolyMatrix(rows, std::vector<Polynomial>(cols, Polynomial(ring)));
}

PolyMatrix poly_transpose(const PolyMatrix& m) {
    if (m.empty()) return {};
    PolyMatrix t(m[0].size(), std::vector<Polynomial>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) throw ContractError("matrix shape mismatch in product");
    const RingPtr& ring = a[0][0].ring();
    PolyMatrix r = poly_matrix(ring, a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

bool poly_matrix_is_zero(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

namespace {

struct MinorMemo {
    const PolyMatrix& M;
    RingPtr ring;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> memo;

    // Expansion along the highest row in rowmask; |rowmask| == |colmask|.
    Polynomial get(std::uint32_t rowmask, std::uint32_t colmask) {
        if (rowmask == 0) return Polynomial::constant(ring, 1);
        auto key = std::make_pair(rowmask, colmask);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int last = 31 - __builtin_clz(rowmask);
        std::uint32_t rest = rowmask & ~(1u << last);
        int k = __builtin_popcount(rowmask);
        Polynomial det(ring);
        int pos = 0;
        for (int j = 0; j < 32; ++j) {
            if (!(colmask >> j & 1u)) continue;
            const Polynomial& e = M[static_cast<std::size_t>(last)][static_cast<std::size_t>(j)];
            if (!e.is_zero()) {
                Polynomial sub = get(rest, colmask & ~(1u << j));
                if (!sub.is_zero()) {
                    Polynomial term = e * sub;
                    if ((k - 1 + pos) % 2) det -= term;
                    else det += term;
                }
            }
            ++pos;
        }
        memo.emplace(key, det);
        return det;
    }
};

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

std::uint32_t to_mask(const std::vector<std::size_t>& s) {
    std::uint32_t m = 0;
    for (auto i : s) m |= 1u << i;
    return m;
}

}  // namespace

Polynomial poly_det(const PolyMatrix& m) {
    if (m.empty()) throw ContractError("determinant of an empty matrix");
    if (m.size() != m[0].size()) throw ContractError("determinant of a non-square matrix");
    if (m.size() > 31) throw ContractError("matrix too large for cofactor expansion");
    MinorMemo memo{m, m[0][0].ring(), {}};
    std::uint32_t full = (1u << m.size()) - 1u;
    return memo.get(full, full);
}

Matrix evaluate(const PolyMatrix& m, const std::vector<mpq_class>& point, const FieldSpec& field) {
    std::size_t c = m.empty() ? 0 : m[0].size();
    Matrix r(field, m.size(), c);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) r.at(i, j) = m[i][j].evaluate(point);
    return r;
}

SymmetryReport check_symmetry(const PolyMatrix& alpha, const PolyMatrix& beta, bool relaxed_degrees) {
    SymmetryReport rep;
    std::size_t N = alpha.size();
    if (N == 0 || beta.size() != N) {
        rep.layout_error = "alpha and beta must both have n+1 >= 1 rows";
        return rep;
    }
    for (std::size_t i = 0; i < N; ++i)
        if (alpha[i].size() != N || beta[i].size() != N) {
            rep.layout_error = "alpha and beta must be square of size n+1 (row " + std::to_string(i + 1) + ")";
            return rep;
        }
    if (!relaxed_degrees) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < 2 * N; ++j) {
                const Polynomial& e = j < N ? alpha[i][j] : beta[i][j - N];
                if (e.is_zero()) continue;
                int want = i == 0 ? 3 : 1;
                if (!e.is_homogeneous() || e.degree() != want) {
                    rep.layout_error = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                       ") must be homogeneous of degree " + std::to_string(want);
                    return rep;
                }
            }
    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            Polynomial s(alpha[0][0].ring());
            for (std::size_t k = 0; k < N; ++k) {
                s += alpha[i][k] * beta[j][k];
                s -= beta[i][k] * alpha[j][k];
            }
            if (!s.is_zero()) {
                rep.failing = std::make_pair(i, j);
                return rep;
            }
        }
    rep.ok = true;
    return rep;
}

SymmetricTableau::SymmetricTableau(RingPtr ring, PolyMatrix alpha, PolyMatrix beta, bool relaxed_degrees)
    : ring_(std::move(ring)), alpha_(std::move(alpha)), beta_(std::move(beta)), relaxed_(relaxed_degrees) {
    auto rep = check_symmetry(alpha_, beta_, relaxed_);
    if (!rep.layout_error.empty()) throw ContractError("tableau layout: " + rep.layout_error);
    if (!rep.ok)
        throw ContractError("tableau is not symmetric: alpha*beta^t - beta*alpha^t is nonzero at (" +
                            std::to_string(rep.failing->first + 1) + "," + std::to_string(rep.failing->second + 1) + ")");
}

const Polynomial& SymmetricTableau::entry(std::size_t i, std::size_t j) const {
    std::size_t N = alpha_.size();
    return j < N ? alpha_[i][j] : beta_[i][j - N];
}

PolyMatrix SymmetricTableau::matrix() const {
    std::size_t N = alpha_.size();
    PolyMatrix A(N, std::vector<Polynomial>(2 * N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < 2 * N; ++j) A[i][j] = entry(i, j);
    return A;
}

OpMove OpMove::rows(Matrix g) {
    OpMove m;
    m.kind = Kind::rows;
    m.g = std::move(g);
    return m;
}

OpMove OpMove::add_col_same(const mpq_class& lambda, int mu, bool swapped) {
    OpMove m;
    m.kind = Kind::add_col_same;
    m.lambda = lambda;
    m.mu = mu;
    m.swapped = swapped;
    return m;
}

OpMove OpMove::add_col_pair(const mpq_class& lambda, int mu, int nu, bool swapped) {
    OpMove m;
    m.kind = Kind::add_col_pair;
    m.lambda = lambda;
    m.mu = mu;
    m.nu = nu;
    m.swapped = swapped;
    return m;
}

OpMove OpMove::transfer(const mpq_class& lambda, int mu, int nu) {
    OpMove m;
    m.kind = Kind::transfer;
    m.lambda = lambda;
    m.mu = mu;
    m.nu = nu;
    return m;
}

OpMove OpMove::swap(int mu, int nu) {
    OpMove m;
    m.kind = Kind::swap;
    m.mu = mu;
    m.nu = nu;
    return m;
}

OpMove OpMove::rotate(int mu) {
    OpMove m;
    m.kind = Kind::rotate;
    m.mu = mu;
    return m;
}

std::string OpMove::kind_name() const {
    switch (kind) {
        case Kind::rows: return "rows";
        case Kind::add_col_same: return "add_col_same";
        case Kind::add_col_pair: return "add_col_pair";
        case Kind::transfer: return "transfer";
        case Kind::swap: return "swap";
        case Kind::rotate: return "rotate";
    }
    return "?";
}

Matrix symplectic_form(const FieldSpec& field, std::size_t N) {
    Matrix J(field, 2 * N, 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        J.at(i, N + i) = 1;
        J.at(N + i, i) = field.neg(1);
    }
    return J;
}

bool is_symplectic(const Matrix& S) {
    if (S.rows() != S.cols() || S.rows() % 2) return false;
    Matrix J = symplectic_form(S.field(), S.rows() / 2);
    return S * J * S.transpose() == J;
}

Matrix OpMove::symplectic(const FieldSpec& field, std::size_t N) const {
    auto check = [&](int i) {
        if (i < 0 || static_cast<std::size_t>(i) >= N) throw ContractError("move column index " + std::to_string(i) + " out of range");
        return static_cast<std::size_t>(i);
    };
    Matrix S = Matrix::identity(field, 2 * N);
    mpq_class l = field.reduce(lambda);
    switch (kind) {
        case Kind::rows: throw ContractError("rows(g) is not a column move");
        case Kind::add_col_same: {
            std::size_t m = check(mu);
            if (swapped) S.at(N + m, m) = l;
            else S.at(m, N + m) = l;
            break;
        }
        case Kind::add_col_pair: {
            std::size_t m = check(mu), v = check(nu);
            if (m == v) throw ContractError("add_col_pair needs two distinct columns");
            if (swapped) {
                S.at(N + m, v) = l;
                S.at(N + v, m) = l;
            } else {
                S.at(m, N + v) = l;
                S.at(v, N + m) = l;
            }
            break;
        }
        case Kind::transfer: {
            std::size_t m = check(mu), v = check(nu);
            if (m == v) throw ContractError("transfer needs two distinct columns");
            S.at(m, v) = l;
            S.at(N + v, N + m) = field.neg(l);
            break;
        }
        case Kind::swap: {
            std::size_t m = check(mu), v = check(nu);
            if (m == v) break;
            for (std::size_t off : {std::size_t(0), N}) {
                S.at(off + m, off + m) = 0;
                S.at(off + v, off + v) = 0;
                S.at(off + m, off + v) = 1;
                S.at(off + v, off + m) = 1;
            }
            break;
        }
        case Kind::rotate: {
            std::size_t m = check(mu);
            S.at(m, m) = 0;
            S.at(N + m, N + m) = 0;
            S.at(m, N + m) = 1;
            S.at(N + m, m) = field.neg(1);
            break;
        }
    }
    return S;
}

SymmetricTableau apply_symplectic(const SymmetricTableau& T, const Matrix& S) {
    std::size_t N = T.size();
    if (S.rows() != 2 * N || S.cols() != 2 * N) throw ContractError("symplectic matrix has the wrong size");
    if (!is_symplectic(S)) {
        Matrix J = symplectic_form(S.field(), N);
        Matrix defect = S * J * S.transpose() - J;
        std::string where;
        for (std::size_t i = 0; i < defect.rows() && where.empty(); ++i)
            for (std::size_t j = 0; j < defect.cols() && where.empty(); ++j)
                if (defect.at(i, j) != 0)
                    where = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + S.field().printable(defect.at(i, j)).get_str();
        throw ContractError("matrix is not symplectic: S J S^t - J is nonzero at " + where);
    }
    PolyMatrix A = T.matrix();
    PolyMatrix alpha = poly_matrix(T.ring(), N, N), beta = poly_matrix(T.ring(), N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t r = 0; r < 2 * N; ++r) {
            Polynomial acc(T.ring());
            for (std::size_t c = 0; c < 2 * N; ++c)
                if (S.at(r, c) != 0 && !A[i][c].is_zero()) acc += A[i][c].scale(S.at(r, c));
            (r < N ? alpha[i][r] : beta[i][r - N]) = std::move(acc);
        }
    return SymmetricTableau(T.ring(), std::move(alpha), std::move(beta), T.relaxed());
}

SymmetricTableau apply_op(const SymmetricTableau& T, const OpMove& m) {
    std::size_t N = T.size();
    if (m.kind != OpMove::Kind::rows) return apply_symplectic(T, m.symplectic(T.ring()->field(), N));
    if (!m.g) throw ContractError("rows move without a matrix");
    const Matrix& g = *m.g;
    if (g.rows() != N || g.cols() != N) throw ContractError("rows(g) has the wrong size");
    for (std::size_t j = 0; j < N; ++j) {
        if (g.at(0, j) != (j == 0 ? 1 : 0)) throw ContractError("rows(g) must have first row (1,0,...,0)");
        if (g.at(j, 0) != (j == 0 ? 1 : 0)) throw ContractError("rows(g) must not mix the first row into the others");
    }
    if (determinant(g) == 0) throw ContractError("rows(g) is not invertible");
    PolyMatrix alpha = poly_matrix(T.ring(), N, N), beta = poly_matrix(T.ring(), N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            if (g.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < N; ++j) {
                alpha[i][j] += T.alpha()[k][j].scale(g.at(i, k));
                beta[i][j] += T.beta()[k][j].scale(g.at(i, k));
            }
        }
    return SymmetricTableau(T.ring(), std::move(alpha), std::move(beta), T.relaxed());
}

SymmetricTableau apply_ops(const SymmetricTableau& T, const std::vector<OpMove>& moves) {
    SymmetricTableau cur = T;
    for (const auto& m : moves) cur = apply_op(cur, m);
    return cur;
}

Matrix ScalarTableau::joined() const {
    Matrix j(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) j.at(i, k) = a.at(i, k);
        for (std::size_t k = 0; k < b.cols(); ++k) j.at(i, a.cols() + k) = b.at(i, k);
    }
    return j;
}

bool scalar_symmetric(const ScalarTableau& M) {
    if (M.a.rows() != M.b.rows() || M.a.cols() != M.b.cols()) return false;
    return M.a * M.b.transpose() == M.b * M.a.transpose();
}

ScalarTableau apply_symplectic(const ScalarTableau& M, const Matrix& S) {
    std::size_t N = M.a.cols();
    if (S.rows() != 2 * N || !is_symplectic(S)) throw ContractError("matrix is not symplectic of the right size");
    Matrix rows = M.joined() * S.transpose();
    ScalarTableau out{Matrix(M.a.field(), M.a.rows(), N), Matrix(M.a.field(), M.a.rows(), N)};
    for (std::size_t i = 0; i < M.a.rows(); ++i)
        for (std::size_t j = 0; j < N; ++j) {
            out.a.at(i, j) = rows.at(i, j);
            out.b.at(i, j) = rows.at(i, N + j);
        }
    return out;
}

ScalarTableau apply_op(const ScalarTableau& M, const OpMove& m) {
    if (m.kind != OpMove::Kind::rows) return apply_symplectic(M, m.symplectic(M.a.field(), M.a.cols()));
    if (!m.g || m.g->rows() != M.a.rows() || m.g->cols() != M.a.rows()) throw ContractError("rows(g) has the wrong size");
    if (determinant(*m.g) == 0) throw ContractError("rows(g) is not invertible");
    return ScalarTableau{*m.g * M.a, *m.g * M.b};
}

std::vector<Minor> all_minors(const PolyMatrix& M, int k) {
    if (M.empty()) throw ContractError("minors of an empty matrix");
    std::size_t R = M.size(), C = M[0].size();
    if (k < 1 || static_cast<std::size_t>(k) > std::min(R, C))
        throw ContractError("minor size " + std::to_string(k) + " out of range for a " + std::to_string(R) + "x" + std::to_string(C) + " matrix");
    if (C > 31 || R > 31) throw ContractError("matrix too large for minor enumeration");
    MinorMemo memo{M, M[0][0].ring(), {}};
    std::vector<Minor> out;
    auto rs = subsets(R, static_cast<std::size_t>(k));
    auto cs = subsets(C, static_cast<std::size_t>(k));
    for (const auto& r : rs)
        for (const auto& c : cs) out.push_back({r, c, memo.get(to_mask(r), to_mask(c))});
    return out;
}

Ideal fitting_ideal(const PolyMatrix& M, int k, const RingPtr& ring) {
    if (k == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
    std::vector<Polynomial> gens;
    for (auto& m : all_minors(M, k))
        if (!m.value.is_zero()) gens.push_back(std::move(m.value));
    return Ideal(ring, gens);
}

PolyMatrix erase_first_row(const SymmetricTableau& T) {
    PolyMatrix A = T.matrix();
    A.erase(A.begin());
    return A;
}

SymmetricTableau attach_first_row(const RingPtr& ring, const std::vector<Polynomial>& first_row, const PolyMatrix& rest) {
    std::size_t N = rest.size() + 1;
    if (first_row.size() != 2 * N) throw ContractError("first row must have 2n+2 entries");
    PolyMatrix alpha = poly_matrix(ring, N, N), beta = poly_matrix(ring, N, N);
    for (std::size_t i = 0; i < N; ++i) {
        const auto& row = i == 0 ? first_row : rest[i - 1];
        if (row.size() != 2 * N) throw ContractError("row " + std::to_string(i + 1) + " must have 2n+2 entries");
        for (std::size_t j = 0; j < N; ++j) {
            alpha[i][j] = row[j];
            beta[i][j] = row[N + j];
        }
    }
    return SymmetricTableau(ring, std::move(alpha), std::move(beta));
}

DegeneracyScheme degeneracy_scheme(const SymmetricTableau& T) {
    int n = T.n();
    if (n < 1) throw ContractError("degeneracy scheme needs n >= 1");
    Ideal I = fitting_ideal(erase_first_row(T), n, T.ring());
    Ideal S = saturate(I);
    DegeneracyScheme d{S};
    int dim = dimension(S);
    d.codim = T.ring()->nvars() - dim;
    d.finite = dim <= 1;
    if (dim == 1) {
        d.multiplicity = multiplicity(S);
        d.points = point_count(S);
        d.reduced = d.points == d.multiplicity;
    } else if (dim <= 0) {
        d.reduced = true;
    }
    return d;
}

}  // namespace symcanon
