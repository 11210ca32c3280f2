#include "symcanon/koszul.hpp"

#include <algorithm>

namespace symcanon {

namespace {

void lex_subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        lex_subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    lex_subsets(n, k, 0, cur, out);
    return out;
}

void require_verified(const RegularSequence& v) {
    if (!v.verified()) throw ContractError("sequence is not a verified regular sequence");
}

// Coefficient matrix of (S -> S v) restricted to skew S with entries of
// degree e: rows (i, monomial of degree e + deg v), columns (pair, monomial).
Matrix skew_system(const RegularSequence& v, int e) {
    const RingPtr& R = v.ring();
    std::size_t m = v.length();
    int nv = R->nvars();
    const auto& src = graded_basis(nv, e);
    int tdeg = e + v.degree();
    const auto& tgt = graded_basis(nv, tdeg);
    auto pairs = lex_subsets(m, 2);
    Matrix A(R->field(), m * tgt.size(), pairs.size() * src.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        std::size_t j = pairs[p][0], k = pairs[p][1];
        for (std::size_t s = 0; s < src.size(); ++s) {
            std::size_t col = p * src.size() + s;
            // S_jk contributes +mu*v_k to row j and -mu*v_j to row k.
            for (const auto& [mon, c] : v.forms()[k].terms()) {
                std::size_t r = j * tgt.size() + graded_basis_index(nv, tdeg, mon * src[s]);
                A.at(r, col) = R->field().add(A.at(r, col), c);
            }
            for (const auto& [mon, c] : v.forms()[j].terms()) {
                std::size_t r = k * tgt.size() + graded_basis_index(nv, tdeg, mon * src[s]);
                A.at(r, col) = R->field().sub(A.at(r, col), c);
            }
        }
    }
    return A;
}

}  // namespace

bool is_regular_sequence(const std::vector<Polynomial>& forms) {
    if (forms.empty()) return true;
    for (const auto& f : forms)
        if (f.is_zero() || !f.is_homogeneous()) throw ContractError("regular sequence test needs nonzero homogeneous forms");
    return codim(Ideal(forms[0].ring(), forms)) == static_cast<int>(forms.size());
}

RegularSequence RegularSequence::make(std::vector<Polynomial> forms) {
    if (forms.empty()) throw ContractError("empty sequence");
    int d = forms[0].degree();
    for (const auto& f : forms)
        if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
            throw ContractError("sequence entries must be nonzero forms of a common degree");
    RegularSequence s;
    s.verified_ = is_regular_sequence(forms);
    s.forms_ = std::move(forms);
    return s;
}

PolyMatrix koszul_differential(const RegularSequence& seq, int i) {
    require_verified(seq);
    std::size_t m = seq.length();
    if (i < 0 || static_cast<std::size_t>(i) >= m)
        throw ContractError("Koszul differential index " + std::to_string(i) + " out of range");
    auto rows = lex_subsets(m, static_cast<std::size_t>(i));
    auto cols = lex_subsets(m, static_cast<std::size_t>(i) + 1);
    PolyMatrix d = poly_matrix(seq.ring(), rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t s = 0; s < cols[c].size(); ++s) {
            std::vector<std::size_t> rest = cols[c];
            rest.erase(rest.begin() + static_cast<long>(s));
            std::size_t r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), rest) - rows.begin());
            const Polynomial& v = seq.forms()[cols[c][s]];
            d[r][c] = s % 2 ? -v : v;
        }
    return d;
}

bool SkewWitness::is_skew() const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j)
            if (entries[i][j] != -entries[j][i]) return false;
    return true;
}

std::vector<Polynomial> skew_apply(const SkewWitness& S, const std::vector<Polynomial>& v) {
    if (S.size() != v.size()) throw ContractError("skew witness and vector differ in size");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Polynomial acc(v[0].ring());
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!S.entries[i][j].is_zero()) acc += S.entries[i][j] * v[j];
        out.push_back(acc);
    }
    return out;
}

SkewWitness solve_skew(const std::vector<Polynomial>& W, const RegularSequence& v) {
    require_verified(v);
    std::size_t m = v.length();
    if (W.size() != m) throw ContractError("W and v differ in length");
    const RingPtr& R = v.ring();
    Polynomial residual(R);
    for (std::size_t i = 0; i < m; ++i) residual += W[i] * v.forms()[i];
    if (!residual.is_zero()) throw ContractError("sum W_i v_i is not zero; residual " + residual.to_string());
    SkewWitness S{poly_matrix(R, m, m), -1};
    int dW = -1;
    for (const auto& w : W) {
        if (w.is_zero()) continue;
        if (!w.is_homogeneous() || (dW >= 0 && w.degree() != dW))
            throw ContractError("W entries must be forms of a common degree");
        dW = w.degree();
    }
    if (dW < 0) return S;
    int e = dW - v.degree();
    if (e < 0) throw ContractError("no skew witness: W has degree below the sequence degree");
    S.degree = e;
    Matrix A = skew_system(v, e);
    int nv = R->nvars();
    const auto& tgt = graded_basis(nv, dW);
    std::vector<mpq_class> rhs(m * tgt.size(), 0);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [mon, c] : W[i].terms()) rhs[i * tgt.size() + graded_basis_index(nv, dW, mon)] = c;
    auto x = solve(A, rhs);
    if (!x) throw ContractError("no skew witness exists; the sequence is not regular in this degree");
    auto pairs = lex_subsets(m, 2);
    std::size_t nb = graded_basis(nv, e).size();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        Polynomial entry = poly_from_coeffs(R, e, *x, p * nb);
        S.entries[pairs[p][0]][pairs[p][1]] = entry;
        S.entries[pairs[p][1]][pairs[p][0]] = -entry;
    }
    auto check = skew_apply(S, v.forms());
    for (std::size_t i = 0; i < m; ++i)
        if (check[i] != W[i]) throw std::logic_error("skew witness failed its post-check");
    return S;
}

long ambiguity_dim(const RegularSequence& v, int d) {
    require_verified(v);
    int e = d - 2 * v.degree();
    if (e < 0) return 0;
    Matrix A = skew_system(v, e);
    return static_cast<long>(A.cols() - rank(A));
}

}  // namespace symcanon
