#include "symcanon/canonical.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "symcanon/random.hpp"

namespace symcanon {

namespace {

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
    return s + "}";
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

PolyMatrix sub_matrix(const PolyMatrix& M, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    PolyMatrix out;
    for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto c : cols) row.push_back(M[r][c]);
        out.push_back(row);
    }
    return out;
}

long sum_binomials(const std::vector<int>& shifts, int m, int nvars) {
    long s = 0;
    for (int a : shifts) s += static_cast<long>(binomial(m - a + nvars - 1, nvars - 1));
    return s;
}

RankCertificate rank_certificate(const PolyMatrix& M, std::size_t expected, const RingPtr& ring, std::uint64_t seed) {
    RankCertificate c;
    c.expected = expected;
    if (expected == 0) {
        c.ok = true;
        return c;
    }
    std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    if (rows < expected || cols < expected) {
        c.detail = "matrix is too small for rank " + std::to_string(expected);
        return c;
    }
    const FieldSpec& F = ring->field();
    FieldRng rng(seed, F, 50);
    std::size_t best = 0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<mpq_class> pt;
        for (int i = 0; i < ring->nvars(); ++i) pt.push_back(rng.element());
        Matrix E = evaluate(M, pt, F);
        std::size_t r = rank(E);
        best = std::max(best, r);
        if (r < expected) continue;
        for (const auto& rs : subsets(rows, expected))
            for (const auto& cs : subsets(cols, expected)) {
                if (determinant(E.submatrix(rs, cs)) == 0) continue;
                if (poly_det(sub_matrix(M, rs, cs)).is_zero()) throw std::logic_error("minor vanishes but its value does not");
                c.ok = true;
                c.rows = rs;
                c.cols = cs;
                c.detail = "nonzero minor rows " + join(rs) + " cols " + join(cs);
                return c;
            }
    }
    bool all_zero = true;
    for (const auto& m : all_minors(M, static_cast<int>(expected)))
        if (!m.value.is_zero()) {
            all_zero = false;
            break;
        }
    c.detail = all_zero ? "all " + std::to_string(expected) + "x" + std::to_string(expected) + " minors vanish identically"
                        : "rank " + std::to_string(best) + " < " + std::to_string(expected) + " at 4 random points";
    return c;
}

std::size_t count_cols(const PolyMatrix& M) { return M.empty() ? 0 : M[0].size(); }

}  // namespace

GradedShifts GradedShifts::canonical(int n, int nvars) {
    if (n < 0) throw ContractError("n must be nonnegative");
    GradedShifts s;
    s.nvars = nvars;
    s.f0.push_back(0);
    s.f0.insert(s.f0.end(), static_cast<std::size_t>(n), 2);
    s.f1.assign(static_cast<std::size_t>(2 * n + 2), 3);
    s.f2.push_back(6);
    s.f2.insert(s.f2.end(), static_cast<std::size_t>(n), 4);
    return s;
}

GradedResolution make_resolution(const RingPtr& ring, PolyMatrix d1, PolyMatrix d2, GradedShifts shifts) {
    if (d1.empty() || d2.empty() || count_cols(d1) != d2.size()) throw ContractError("resolution maps have incompatible shapes");
    if (!poly_matrix_is_zero(poly_mul(d1, d2))) throw ContractError("resolution maps do not compose to zero");
    GradedResolution R;
    R.ring = ring;
    R.n = static_cast<int>(d1.size()) - 1;
    R.d1 = std::move(d1);
    R.d2 = std::move(d2);
    R.shifts = std::move(shifts);
    return R;
}

GradedResolution build_resolution(const SymmetricTableau& T) {
    std::size_t N = T.size();
    PolyMatrix d2 = poly_matrix(T.ring(), 2 * N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            d2[i][j] = -T.beta()[j][i];
            d2[N + i][j] = T.alpha()[j][i];
        }
    return make_resolution(T.ring(), T.matrix(), std::move(d2), GradedShifts::canonical(T.n(), T.ring()->nvars()));
}

long graded_dim(const GradedShifts& s, int m) {
    if (m < 0) throw ContractError("degree must be nonnegative");
    return sum_binomials(s.f0, m, s.nvars) - sum_binomials(s.f1, m, s.nvars) + sum_binomials(s.f2, m, s.nvars);
}

long graded_dim(const GradedResolution& R, int m) { return graded_dim(R.shifts, m); }

SurfaceInvariants invariants(const GradedShifts& s) {
    long d[6];
    for (int m = 1; m <= 5; ++m) d[m] = graded_dim(s, m);
    SurfaceInvariants inv;
    inv.p_g = d[1];
    if ((d[3] - d[2]) % 2 != 0) throw ContractError("inconsistent dims: P_3 - P_2 is odd");
    inv.K2 = (d[3] - d[2]) / 2;
    inv.chi = d[2] - inv.K2;
    for (int m = 4; m <= 5; ++m)
        if (d[m] != static_cast<long>(binomial(m, 2)) * inv.K2 + inv.chi)
            throw ContractError("inconsistent dims at m = " + std::to_string(m));
    inv.q = 1 + inv.p_g - inv.chi;
    inv.n = inv.K2 - 9;
    inv.delta = static_cast<long>(binomial(inv.K2 - 8, 2));
    return inv;
}

SurfaceInvariants invariants(const GradedResolution& R) { return invariants(R.shifts); }

AcyclicityReport acyclicity_check(const GradedResolution& R) {
    AcyclicityReport rep;
    std::size_t r2 = count_cols(R.d2);
    std::size_t r1 = count_cols(R.d1) - r2;
    rep.rank_d1 = rank_certificate(R.d1, r1, R.ring, 0xacc1);
    rep.rank_d2 = rank_certificate(R.d2, r2, R.ring, 0xacc2);
    rep.codim_d1 = codim(fitting_ideal(R.d1, static_cast<int>(r1), R.ring));
    rep.codim_d2 = codim(fitting_ideal(R.d2, static_cast<int>(r2), R.ring));
    rep.ok = rep.rank_d1.ok && rep.rank_d2.ok && rep.codim_d1 >= 2 && rep.codim_d2 >= 2;
    std::ostringstream os;
    os << "rank d1 = " << r1 << ": " << (rep.rank_d1.ok ? "ok" : "FAIL") << " (" << rep.rank_d1.detail << "); "
       << "rank d2 = " << r2 << ": " << (rep.rank_d2.ok ? "ok" : "FAIL") << " (" << rep.rank_d2.detail << "); "
       << "codim I_" << r1 << "(d1) = " << rep.codim_d1 << "; codim I_" << r2 << "(d2) = " << rep.codim_d2;
    rep.detail = os.str();
    return rep;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::assumed: return "assumed";
    }
    return "?";
}

RingConditionResult ring_condition_check(const SymmetricTableau& T) {
    RingConditionResult r;
    int n = T.n();
    DegeneracyScheme ds = degeneracy_scheme(T);
    if (!ds.finite || !ds.reduced) {
        r.status = CheckStatus::skipped;
        r.reason = ds.finite ? "degeneracy scheme is not reduced" : "degeneracy scheme is not finite";
        return r;
    }
    Ideal InAp = fitting_ideal(erase_first_row(T), n, T.ring());
    Ideal InA = fitting_ideal(T.matrix(), n, T.ring());
    r.sat_In_A_prime = ds.ideal;
    r.sat_In_A = saturate(InA);
    r.saturated_equal = ideal_equal(*r.sat_In_A_prime, *r.sat_In_A);
    if (n == 2) r.unsaturated_equal = ideal_equal(InA, InAp);
    r.status = r.saturated_equal && r.unsaturated_equal.value_or(true) ? CheckStatus::pass : CheckStatus::fail;
    if (!r.saturated_equal) r.reason = "saturated I_n(A') and I_n(A) differ";
    else if (!r.unsaturated_equal.value_or(true)) r.reason = "I_2(A) and I_2(A') differ before saturation";
    return r;
}

Ideal conductor_ideal(const SymmetricTableau& T) {
    RingConditionResult rc = ring_condition_check(T);
    if (rc.status != CheckStatus::pass) throw ContractError("ring condition does not hold: " + rc.reason);
    return ideal_sum(*rc.sat_In_A_prime, fitting_ideal(T.matrix(), T.n() + 1, T.ring()));
}

// ---------------------------------------------------------------------------
// Multiplication table

namespace {

bool solve_table(MultiplicationTable& t) {
    const RingPtr& R = t.ring;
    int n = t.n, nv = R->nvars();
    int dt = 2 * (n + 2);
    const auto& b4 = graded_basis(nv, 4);
    const auto& b2 = graded_basis(nv, 2);
    const auto& bt = graded_basis(nv, dt);
    std::size_t unknowns = b4.size() + static_cast<std::size_t>(n) * b2.size();
    Matrix sys(R->field(), bt.size(), unknowns);
    auto put_col = [&](std::size_t col, const Polynomial& f) {
        Polynomial r = normal_form_poly(f, t.surface);
        for (const auto& [m, c] : r.terms()) sys.at(graded_basis_index(nv, dt, m), col) = c;
    };
    Polynomial D2 = t.D * t.D;
    std::size_t col = 0;
    for (const auto& m : b4) put_col(col++, D2.mul_monomial(m, 1));
    for (int k = 1; k <= n; ++k) {
        Polynomial DN = t.D * t.N[static_cast<std::size_t>(k)];
        for (const auto& m : b2) put_col(col++, DN.mul_monomial(m, 1));
    }
    Polynomial zero(R);
    t.entries.assign(static_cast<std::size_t>(n + 1), std::vector<TableEntry>(static_cast<std::size_t>(n + 1)));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            TableEntry e{zero, std::vector<Polynomial>(static_cast<std::size_t>(n), zero)};
            if (i == 0 && j == 0) e.c0 = Polynomial::constant(R, 1);
            else if (i == 0 || j == 0) e.c[static_cast<std::size_t>(std::max(i, j) - 1)] = Polynomial::constant(R, 1);
            t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Polynomial rhs = normal_form_poly(t.N[static_cast<std::size_t>(i)] * t.N[static_cast<std::size_t>(j)], t.surface);
            std::vector<mpq_class> b(bt.size(), 0);
            for (const auto& [m, c] : rhs.terms()) b[graded_basis_index(nv, dt, m)] = c;
            auto x = solve(sys, b);
            if (!x) return false;
            TableEntry e{poly_from_coeffs(R, 4, *x, 0), {}};
            for (int k = 0; k < n; ++k)
                e.c.push_back(poly_from_coeffs(R, 2, *x, b4.size() + static_cast<std::size_t>(k) * b2.size()));
            t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
            t.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e;
            Polynomial check = t.N[static_cast<std::size_t>(i)] * t.N[static_cast<std::size_t>(j)] - e.c0 * D2;
            for (int k = 0; k < n; ++k) check -= e.c[static_cast<std::size_t>(k)] * t.D * t.N[static_cast<std::size_t>(k + 1)];
            if (!normal_form_poly(check, t.surface).is_zero()) throw std::logic_error("multiplication table failed its residue check");
        }
    return true;
}

}  // namespace

MultiplicationTable multiplication_table(const SymmetricTableau& T, int skip) {
    int n = T.n();
    if (n < 1) throw ContractError("multiplication table needs n >= 1");
    MultiplicationTable t;
    t.ring = T.ring();
    t.n = n;
    t.surface = fitting_ideal(T.matrix(), n + 1, T.ring());
    PolyMatrix A = T.matrix();
    std::size_t N = T.size();
    int seen = 0;
    bool found = false;
    for (const auto& cols : subsets(2 * N, static_cast<std::size_t>(n))) {
        // Mt v = -r0 on the chosen columns: Mt[j][k] = A[k+1][cols[j]].
        PolyMatrix Mt = poly_matrix(T.ring(), cols.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t k = 0; k < cols.size(); ++k) Mt[j][k] = A[k + 1][cols[j]];
        Polynomial D = poly_det(Mt);
        if (D.is_zero() || normal_form_poly(D, t.surface).is_zero()) continue;
        if (seen++ < skip) continue;
        t.columns = cols;
        t.D = D;
        t.N = {D};
        for (std::size_t k = 0; k < cols.size(); ++k) {
            PolyMatrix Mk = Mt;
            for (std::size_t j = 0; j < cols.size(); ++j) Mk[j][k] = -A[0][cols[j]];
            t.N.push_back(poly_det(Mk));
        }
        found = true;
        break;
    }
    if (!found) throw ContractError("no invertible submatrix found");
    if (solve_table(t)) return t;
    t.surface = saturate(t.surface, Ideal(T.ring(), {t.D}));
    t.surface_saturated = true;
    if (solve_table(t)) return t;
    throw ContractError("not in module span: a product v_i v_j is not an A-combination of 1, v_1..v_n");
}

Polynomial cleared_residue(const MultiplicationTable& t, const TableEntry& x) {
    Polynomial acc = x.c0 * t.D;
    for (std::size_t k = 0; k < x.c.size(); ++k) acc += x.c[k] * t.N[k + 1];
    return normal_form_poly(acc, t.surface);
}

TableEntry table_multiply(const MultiplicationTable& t, const TableEntry& x, const TableEntry& y) {
    std::size_t n = static_cast<std::size_t>(t.n);
    Polynomial zero(t.ring);
    TableEntry out{zero, std::vector<Polynomial>(n, zero)};
    auto coef = [&](const TableEntry& e, std::size_t i) -> const Polynomial& { return i == 0 ? e.c0 : e.c[i - 1]; };
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            const Polynomial &xi = coef(x, i), &yj = coef(y, j);
            if (xi.is_zero() || yj.is_zero()) continue;
            Polynomial s = xi * yj;
            const TableEntry& e = t.entries[i][j];
            out.c0 += s * e.c0;
            for (std::size_t k = 0; k < n; ++k) out.c[k] += s * e.c[k];
        }
    return out;
}

bool check_associativity(const MultiplicationTable& t) {
    std::size_t n = static_cast<std::size_t>(t.n);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t k = 0; k <= n; ++k) {
                const TableEntry& ek = t.entries[0][k];
                const TableEntry& ei = t.entries[0][i];
                TableEntry lhs = table_multiply(t, t.entries[i][j], ek);
                TableEntry rhs = table_multiply(t, ei, t.entries[j][k]);
                if (cleared_residue(t, lhs) != cleared_residue(t, rhs)) return false;
            }
    return true;
}

bool tables_agree(const MultiplicationTable& a, const MultiplicationTable& b) {
    if (a.n != b.n) return false;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(a.n); ++i)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(a.n); ++j)
            if (cleared_residue(a, a.entries[i][j]) != cleared_residue(a, b.entries[i][j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Reflexivity complex

ReflexivityReport reflexivity_check(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B, int D, bool flip_sign) {
    if (A.size() != 4 || B.size() != 4) throw ContractError("reflexivity complex needs four A_i and four B_i");
    const RingPtr& R = A[0].ring();
    auto common_degree = [](const std::vector<Polynomial>& v) {
        int d = -1;
        for (const auto& f : v) {
            if (f.is_zero()) continue;
            if (!f.is_homogeneous() || (d >= 0 && f.degree() != d)) throw ContractError("reflexivity entries must be forms of a common degree");
            d = f.degree();
        }
        if (d < 0) throw ContractError("reflexivity entries are all zero");
        return d;
    };
    int da = common_degree(A), db = common_degree(B);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) gens.push_back(A[i] * B[j] - A[j] * B[i]);
    Ideal I(R, gens);
    Polynomial z(R);
    PolyMatrix psi{{A[1], -A[0], z, z}, {A[2], z, -A[0], z}, {A[3], z, z, -A[0]},
                   {z, A[2], -A[1], z}, {z, A[3], z, -A[1]}, {z, z, A[3], -A[2]}};
    if (flip_sign) psi[0][0] = -psi[0][0];
    PolyMatrix phi{{A[0], B[0]}, {A[1], B[1]}, {A[2], B[2]}, {A[3], B[3]}};

    ReflexivityReport rep;
    rep.composite_zero = true;
    for (const auto& row : poly_mul(psi, phi))
        for (const auto& e : row)
            if (!normal_form_poly(e, I).is_zero()) rep.composite_zero = false;
    if (!rep.composite_zero) return rep;

    int nv = R->nvars();
    rep.ok = true;
    for (int d = 0; d <= D; ++d) {
        ReflexivityDegree rd;
        rd.degree = d;
        // ker psi on (S/I)_d^4 -> (S/I)_{d+da}^6
        auto std_d = standard_monomials(I, d);
        int dt = d + da;
        std::size_t bt = graded_basis(nv, dt).size();
        Matrix K(R->field(), 4 * std_d.size(), 6 * bt);
        std::size_t row = 0;
        for (std::size_t j = 0; j < 4; ++j)
            for (const auto& m : std_d) {
                for (std::size_t r = 0; r < 6; ++r) {
                    if (psi[r][j].is_zero()) continue;
                    Polynomial f = normal_form_poly(psi[r][j].mul_monomial(m, 1), I);
                    for (const auto& [mm, c] : f.terms()) K.at(row, r * bt + graded_basis_index(nv, dt, mm)) = c;
                }
                ++row;
            }
        rd.kernel_dim = static_cast<long>(4 * std_d.size() - rank(K));
        // image of phi: (S/I)_{d-da} (+) (S/I)_{d-db} -> (S/I)_d^4
        std::size_t bd = graded_basis(nv, d).size();
        std::vector<std::vector<mpq_class>> rows;
        for (int c = 0; c < 2; ++c) {
            int src = d - (c == 0 ? da : db);
            if (src < 0) continue;
            for (const auto& m : standard_monomials(I, src)) {
                std::vector<mpq_class> v(4 * bd, 0);
                for (std::size_t i = 0; i < 4; ++i) {
                    Polynomial f = normal_form_poly(phi[i][static_cast<std::size_t>(c)].mul_monomial(m, 1), I);
                    for (const auto& [mm, cc] : f.terms()) v[i * bd + graded_basis_index(nv, d, mm)] = cc;
                }
                rows.push_back(std::move(v));
            }
        }
        if (!rows.empty()) rd.image_dim = static_cast<long>(rank(Matrix::from_rows(R->field(), rows)));
        rd.exact = rd.kernel_dim == rd.image_dim;
        rep.ok = rep.ok && rd.exact;
        rep.degrees.push_back(rd);
    }
    return rep;
}

ReflexivityReport generic_reflexivity_check(std::uint32_t p, int D, bool flip_sign) {
    if (p != 0 && static_cast<int>(p) <= D) throw ContractError("characteristic must exceed the degree bound");
    FieldSpec F = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
    RingPtr R = PolyRing::make({"X1", "X2", "X3", "X4", "Y1", "Y2", "Y3", "Y4"}, F);
    std::vector<Polynomial> X, Y;
    for (int i = 0; i < 4; ++i) {
        X.push_back(Polynomial::variable(R, i));
        Y.push_back(Polynomial::variable(R, 4 + i));
    }
    return reflexivity_check(X, Y, D, flip_sign);
}

// ---------------------------------------------------------------------------
// Verification

int VerificationReport::assumed_count() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::assumed; }));
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

VerificationReport verify_instance(const SymmetricTableau& T, const VerifyOptions& opt) {
    VerificationReport rep;
    int n = T.n();
    rep.n = n;
    SymmetryReport sym = check_symmetry(T.alpha(), T.beta(), T.relaxed());
    rep.checks.push_back({"symmetry", sym.ok ? CheckStatus::pass : CheckStatus::fail, sym.ok ? "alpha*beta^t = beta*alpha^t" : "symmetry violated"});

    GradedResolution res = build_resolution(T);
    std::future<AcyclicityReport> acyc_f = std::async(opt.parallelism > 1 ? std::launch::async : std::launch::deferred,
                                                      [&res] { return acyclicity_check(res); });
    AcyclicityReport acyc = acyc_f.get();
    rep.checks.push_back({"acyclicity", acyc.ok ? CheckStatus::pass : CheckStatus::fail, acyc.detail});
    std::string cname = "codim I_" + std::to_string(n + 1) + "(A) = 2";
    rep.checks.push_back({cname, acyc.codim_d1 == 2 ? CheckStatus::pass : CheckStatus::fail,
                          "codim = " + std::to_string(acyc.codim_d1)});

    long expected_points = static_cast<long>(binomial(n + 1, 2));
    if (!acyc.ok || n < 1) {
        std::string why = n < 1 ? "n < 1" : "acyclicity failed";
        rep.checks.push_back({"degeneracy", CheckStatus::skipped, why});
        rep.checks.push_back({"ring condition", CheckStatus::skipped, why});
    } else {
        auto deg_f = std::async(opt.parallelism > 1 ? std::launch::async : std::launch::deferred, [&T] { return degeneracy_scheme(T); });
        RingConditionResult rc = ring_condition_check(T);
        DegeneracyScheme ds = deg_f.get();
        bool ok = ds.finite && ds.reduced && ds.points == expected_points;
        std::ostringstream os;
        os << (ds.finite ? "finite" : "not finite") << ", " << (ds.reduced ? "reduced" : "not reduced") << ", " << ds.points
           << " points (expected " << expected_points << "), multiplicity " << ds.multiplicity;
        rep.checks.push_back({"degeneracy", ok ? CheckStatus::pass : CheckStatus::fail, os.str()});
        std::string d = rc.status == CheckStatus::skipped ? rc.reason
                        : std::string("saturated ") + (rc.saturated_equal ? "equal" : "different") +
                              (rc.unsaturated_equal ? std::string("; unsaturated ") + (*rc.unsaturated_equal ? "equal" : "different") : "");
        rep.checks.push_back({"ring condition", rc.status, d});
    }

    try {
        SurfaceInvariants inv = invariants(res);
        bool ok = inv.p_g == 5 && inv.q == 0 && inv.chi == 6 && inv.K2 == n + 9;
        std::ostringstream os;
        os << "p_g=" << inv.p_g << " q=" << inv.q << " K^2=" << inv.K2 << " chi=" << inv.chi << " delta=" << inv.delta;
        rep.checks.push_back({"invariants", ok ? CheckStatus::pass : CheckStatus::fail, os.str()});
    } catch (const ContractError& e) {
        rep.checks.push_back({"invariants", CheckStatus::fail, e.what()});
    }
    rep.checks.push_back({"Ann_𝒜(𝓡) prime", CheckStatus::assumed, "not checked"});
    rep.checks.push_back({"rational double points on X", CheckStatus::assumed, "not checked"});
    rep.overall = std::all_of(rep.checks.begin(), rep.checks.end(),
                              [](const CheckResult& c) { return c.status == CheckStatus::pass || c.status == CheckStatus::assumed; });
    return rep;
}

}  // namespace symcanon
