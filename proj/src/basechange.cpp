#include "symcanon/basechange.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symcanon/paramgen.hpp"
#include "symcanon/random.hpp"

namespace symcanon {

bool MinorIndex::good() const { return overlap() == 0; }

int MinorIndex::overlap() const {
    int k = 0;
    for (int i : alpha_cols)
        if (std::find(beta_cols.begin(), beta_cols.end(), i) != beta_cols.end()) ++k;
    return k;
}

Polynomial minor_value(const SymmetricTableau& T, const MinorIndex& idx) {
    std::size_t N = T.size();
    if (idx.alpha_cols.size() + idx.beta_cols.size() != N) throw ContractError("minor index does not select N columns");
    PolyMatrix sub(N);
    for (std::size_t r = 0; r < N; ++r) {
        for (int i : idx.alpha_cols) sub[r].push_back(T.alpha()[r].at(static_cast<std::size_t>(i)));
        for (int j : idx.beta_cols) sub[r].push_back(T.beta()[r].at(static_cast<std::size_t>(j)));
    }
    return poly_det(sub);
}

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

Polynomial column_minor(const PolyMatrix& M, const std::vector<std::size_t>& cols) {
    PolyMatrix sub(M.size());
    for (std::size_t r = 0; r < M.size(); ++r)
        for (std::size_t c : cols) sub[r].push_back(M[r].at(c));
    return poly_det(sub);
}

std::string describe(const SymmetricTableau& T) {
    std::ostringstream os;
    os << "alpha = [";
    for (const auto& row : T.alpha()) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].to_string();
        os << "]";
    }
    os << "], beta = [";
    for (const auto& row : T.beta()) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

/// All maximal minors in scan order: alpha-part size descending, then
/// lexicographic in (alpha_cols, beta_cols).
std::vector<MinorIndex> minor_scan(int N) {
    std::vector<MinorIndex> out;
    for (int k = N; k >= 0; --k) {
        std::vector<bool> pickA(static_cast<std::size_t>(N), false);
        std::fill(pickA.begin(), pickA.begin() + k, true);
        do {
            std::vector<int> I;
            for (int i = 0; i < N; ++i)
                if (pickA[static_cast<std::size_t>(i)]) I.push_back(i);
            std::vector<bool> pickB(static_cast<std::size_t>(N), false);
            std::fill(pickB.begin(), pickB.begin() + (N - k), true);
            do {
                std::vector<int> J;
                for (int j = 0; j < N; ++j)
                    if (pickB[static_cast<std::size_t>(j)]) J.push_back(j);
                out.push_back({I, J});
            } while (std::prev_permutation(pickB.begin(), pickB.end()));
        } while (std::prev_permutation(pickA.begin(), pickA.end()));
    }
    return out;
}

void check_char(const FieldSpec& F) {
    if (F.is_prime_field() && F.characteristic() == 2) throw ContractError("base change needs 2 invertible in the field");
}

}  // namespace

Polynomial plucker_residual(const PolyMatrix& M, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                            const std::vector<std::size_t>& c, bool ignore_signs) {
    if (M.empty()) throw ContractError("plucker_residual: empty matrix");
    std::size_t rows = M.size(), cols = M[0].size();
    for (const auto& r : M)
        if (r.size() != cols) throw ContractError("plucker_residual: ragged matrix");
    if (rows > cols) throw ContractError("plucker_residual: needs at most as many rows as columns");
    if (a.size() >= rows) throw ContractError("plucker_residual: |a| must be smaller than the row count");
    if (b.size() > rows) throw ContractError("plucker_residual: |b| exceeds the row count");
    std::size_t t = rows - a.size();
    std::size_t s = 2 * rows - a.size() - b.size();
    if (c.size() != s) {
        std::ostringstream os;
        os << "plucker_residual: |c| = " << c.size() << " but the relation needs " << s;
        throw ContractError(os.str());
    }
    if (s <= rows) throw ContractError("plucker_residual: the relation needs |c| > row count");
    for (const auto* v : {&a, &b, &c})
        for (std::size_t x : *v)
            if (x >= cols) throw ContractError("plucker_residual: column index out of range");

    const RingPtr& ring = M[0][0].ring();
    Polynomial total(ring);
    std::vector<bool> pick(s, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(t), true);
    do {
        std::vector<std::size_t> perm, first(a), second;
        for (std::size_t i = 0; i < s; ++i)
            if (pick[i]) {
                perm.push_back(i);
                first.push_back(c[i]);
            }
        for (std::size_t i = 0; i < s; ++i)
            if (!pick[i]) {
                perm.push_back(i);
                second.push_back(c[i]);
            }
        second.insert(second.end(), b.begin(), b.end());
        Polynomial term = column_minor(M, first) * column_minor(M, second);
        int sign = ignore_signs ? 1 : permutation_sign(perm);
        total = sign > 0 ? total + term : total - term;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
}

bool is_nzd_mod(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) throw ContractError("is_nzd_mod: f must be nonzero");
    bool zero_ideal = std::all_of(I.generators().begin(), I.generators().end(),
                                  [](const Polynomial& g) { return g.is_zero(); });
    if (zero_ideal) return true;
    return ideal_equal(ideal_quotient(I, f), I);
}

RegularityWitnesses koszul_type_witnesses(const SymmetricTableau& T) {
    RegularityWitnesses w;
    Polynomial da = poly_det(T.alpha()), db = poly_det(T.beta());
    w.det_alpha_nonzero = !da.is_zero();
    if (w.det_alpha_nonzero && !db.is_zero()) w.quotient_equal = is_nzd_mod(db, Ideal(T.ring(), {da}));
    return w;
}

BaseChangeCert make_koszul_type(const SymmetricTableau& T, std::uint64_t seed, int budget) {
    const FieldSpec& F = T.ring()->field();
    check_char(F);
    if (budget <= 0) throw ContractError("make_koszul_type: budget must be positive");
    const int N = static_cast<int>(T.size());
    FieldRng rng(seed ^ 0xb45ec4a6e5ull, F, 7);

    std::vector<OpMove> moves;
    SymmetricTableau cur = T;
    int trials1 = 0, trials2 = 0;

    if (poly_det(cur.alpha()).is_zero()) {
        auto scan = minor_scan(N);
        MinorIndex good;
        // Lower the alpha/beta overlap of a nonvanishing minor one step at a time.
        for (;;) {
            const MinorIndex* best = nullptr;
            for (const auto& idx : scan) {
                if (best && idx.overlap() >= best->overlap()) continue;
                if (!minor_value(cur, idx).is_zero()) best = &idx;
            }
            if (!best)
                throw ContractError("make_koszul_type: every maximal minor vanishes, the input does not present a codim 2 module");
            if (best->good()) {
                good = *best;
                break;
            }
            int H = -1, L = -1;
            for (int i : best->alpha_cols)
                if (std::find(best->beta_cols.begin(), best->beta_cols.end(), i) != best->beta_cols.end()) {
                    H = i;
                    break;
                }
            for (int i = 0; i < N && L < 0; ++i)
                if (std::find(best->alpha_cols.begin(), best->alpha_cols.end(), i) == best->alpha_cols.end() &&
                    std::find(best->beta_cols.begin(), best->beta_cols.end(), i) == best->beta_cols.end())
                    L = i;
            MinorIndex target;
            for (int i : best->alpha_cols)
                if (i != H) target.alpha_cols.push_back(i);
            target.beta_cols = best->beta_cols;
            target.beta_cols.push_back(L);
            std::sort(target.beta_cols.begin(), target.beta_cols.end());
            bool moved = false;
            for (int k = 0; k < budget && !moved; ++k) {
                ++trials1;
                mpq_class lambda = k == 0 ? mpq_class(1) : rng.nonzero();
                OpMove m = OpMove::add_col_pair(lambda, H, L, true);
                SymmetricTableau next = apply_op(cur, m);
                if (!minor_value(next, target).is_zero()) {
                    cur = next;
                    moves.push_back(m);
                    moved = true;
                }
            }
            if (!moved) throw BudgetExceeded("make_koszul_type: overlap reduction exhausted its budget; last state " + describe(cur));
        }
        // alpha_j += b beta_j on the beta part of the good minor.
        bool done = false;
        for (int k = 0; k < budget && !done; ++k) {
            ++trials1;
            mpq_class b = rng.nonzero();
            std::vector<OpMove> step;
            for (int j : good.beta_cols) step.push_back(OpMove::add_col_same(b, j, false));
            SymmetricTableau next = apply_ops(cur, step);
            if (!poly_det(next.alpha()).is_zero()) {
                cur = next;
                moves.insert(moves.end(), step.begin(), step.end());
                done = true;
            }
        }
        if (!done) throw BudgetExceeded("make_koszul_type: det(alpha) stayed zero within the budget; last state " + describe(cur));
    }

    RegularityWitnesses w = koszul_type_witnesses(cur);
    if (!w.ok()) {
        // beta += alpha Z with Z symmetric leaves alpha unchanged.
        bool done = false;
        for (int k = 0; k < budget && !done; ++k) {
            ++trials2;
            std::vector<OpMove> step;
            for (int i = 0; i < N; ++i)
                for (int j = i; j < N; ++j) {
                    mpq_class zeta = rng.element();
                    if (zeta == 0) continue;
                    step.push_back(i == j ? OpMove::add_col_same(zeta, i, true) : OpMove::add_col_pair(zeta, i, j, true));
                }
            SymmetricTableau next = apply_ops(cur, step);
            RegularityWitnesses wn = koszul_type_witnesses(next);
            if (wn.ok()) {
                cur = next;
                moves.insert(moves.end(), step.begin(), step.end());
                w = wn;
                done = true;
            }
        }
        if (!done) {
            std::ostringstream os;
            os << "make_koszul_type: det(beta) stayed a zero divisor mod det(alpha) after " << trials2
               << " trials; last state " << describe(cur);
            throw BudgetExceeded(os.str());
        }
    }

    return BaseChangeCert{std::move(moves), cur, poly_det(cur.alpha()), poly_det(cur.beta()), w, trials1, trials2};
}

bool verify_certificate(const SymmetricTableau& input, const BaseChangeCert& cert, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    SymmetricTableau cur = input;
    for (std::size_t i = 0; i < cert.moves.size(); ++i) {
        try {
            cur = apply_op(cur, cert.moves[i]);
        } catch (const ContractError& e) {
            return fail("move " + std::to_string(i) + " broke the tableau: " + e.what());
        }
        if (!check_symmetry(cur.alpha(), cur.beta(), true).ok) return fail("move " + std::to_string(i) + " broke symmetry");
    }
    if (cur != cert.output) return fail("replayed moves do not reproduce the output");
    Polynomial da = poly_det(cur.alpha()), db = poly_det(cur.beta());
    if (da != cert.det_alpha || db != cert.det_beta) return fail("recorded determinants differ");
    if (da.is_zero()) return fail("det(alpha) is zero");
    if (db.is_zero()) return fail("det(beta) is zero");
    Ideal I(cur.ring(), {da});
    if (!ideal_equal(ideal_quotient(I, db), I)) return fail("(det alpha) : det beta differs from (det alpha)");
    return true;
}

SymmetricTableau sample_linear_pair(std::uint64_t seed, int k, const FieldSpec& field) {
    check_char(field);
    if (k < 1 || k > 3) throw ContractError("sample_linear_pair: size must be 1, 2 or 3");
    RingPtr R = PolyRing::standard(field, 5);
    FieldRng rng(seed * 0x9e3779b97f4a7c15ull + 17, field, 3);
    auto lin = [&]() {
        for (;;) {
            Polynomial f = rng.form(R, 1);
            if (!f.is_zero()) return f;
        }
    };
    auto ku = static_cast<std::size_t>(k);
    PolyMatrix alpha = poly_matrix(R, ku, ku), beta = poly_matrix(R, ku, ku);
    int family = static_cast<int>(seed % 3);
    if (family == 0 && k == 1) family = 2;

    std::vector<OpMove> scramble;
    if (family == 0) {
        // [[x0, x1 | y, z], [0, 0 | x1, -x0]] plus a diagonal block.
        Polynomial x0 = lin(), x1 = lin();
        alpha[0][0] = x0;
        alpha[0][1] = x1;
        beta[0][0] = lin();
        beta[0][1] = lin();
        beta[1][0] = x1;
        beta[1][1] = -x0;
        if (k == 3) {
            alpha[2][2] = lin();
            beta[2][2] = lin();
        }
        // Moves that keep the column span of alpha.
        for (int r = 0; r < 3; ++r) {
            int mu = static_cast<int>(rng.index(ku)), nu = static_cast<int>(rng.index(ku));
            if (mu != nu) scramble.push_back(OpMove::transfer(rng.nonzero(), mu, nu));
            scramble.push_back(OpMove::add_col_same(rng.nonzero(), mu, true));
        }
    } else {
        for (std::size_t i = 0; i < ku; ++i) {
            alpha[i][i] = lin();
            beta[i][i] = lin();
        }
        if (family == 1 && k >= 2) beta[ku - 1][ku - 1] = alpha[0][0];
    }
    SymmetricTableau T(R, alpha, beta, true);
    T = apply_ops(T, scramble);
    if (family == 2) T = apply_symplectic(T, random_symplectic(field, ku, rng.raw()));

    Matrix g = rng.invertible(ku);
    PolyMatrix G = poly_matrix(R, ku, ku);
    for (std::size_t i = 0; i < ku; ++i)
        for (std::size_t j = 0; j < ku; ++j) G[i][j] = Polynomial::constant(R, g.at(i, j));
    return SymmetricTableau(R, poly_mul(G, T.alpha()), poly_mul(G, T.beta()), true);
}

}  // namespace symcanon
