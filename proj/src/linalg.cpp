#include "symcanon/linalg.hpp"

#include <algorithm>

namespace symcanon {

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<mpq_class>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw ContractError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::vector<mpq_class> Matrix::row(std::size_t i) const {
    return std::vector<mpq_class>(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

std::vector<mpq_class> Matrix::col(std::size_t j) const {
    std::vector<mpq_class> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ContractError("matrix shape mismatch in product");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix shape mismatch in sum");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError("matrix shape mismatch in difference");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix r(field_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) r.at(i, j) = at(rs[i], cs[j]);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpq_class& v) { return v == 0; });
}

namespace {

RrefResult rref_modp(const Matrix& m) {
    ModP K(m.field().characteristic());
    std::size_t R = m.rows(), C = m.cols();
    std::vector<std::uint32_t> a(R * C);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) a[i * C + j] = K.from(m.at(i, j));
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p * C + c] == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a[p * C + j], a[r * C + j]);
        std::uint32_t inv = K.inv(a[r * C + c]);
        for (std::size_t j = c; j < C; ++j) a[r * C + j] = K.mul(a[r * C + j], inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            std::uint32_t f = a[i * C + c];
            if (f == 0) continue;
            std::uint64_t nf = K.p - f;
            for (std::size_t j = c; j < C; ++j) {
                std::uint32_t v = a[r * C + j];
                if (v) a[i * C + j] = static_cast<std::uint32_t>((a[i * C + j] + nf * v) % K.p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(m.field(), R, C);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) out.at(i, j) = K.to(a[i * C + j]);
    return {std::move(out), std::move(pivots)};
}

// Integer Gauss-Jordan: after each step every entry is a minor of the
// scaled input, so the division by the previous pivot is exact.
RrefResult rref_rational(const Matrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<mpz_class> a(R * C);
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i * C + j] = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
    }
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p * C + c] == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(a[p * C + j], a[r * C + j]);
        mpz_class piv = a[r * C + c];
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            mpz_class f = a[i * C + c];
            for (std::size_t j = 0; j < C; ++j) {
                if (j == c) continue;
                mpz_class v = piv * a[i * C + j] - f * a[r * C + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * C + j] = v;
            }
            a[i * C + c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    Matrix out(m.field(), R, C);
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class d = a[i * C + pivots[i]];
        for (std::size_t j = 0; j < C; ++j) {
            mpq_class v(a[i * C + j], d);
            v.canonicalize();
            out.at(i, j) = v;
        }
    }
    return {std::move(out), std::move(pivots)};
}

}  // namespace

RrefResult rref(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {m, {}};
    return m.field().is_prime_field() ? rref_modp(m) : rref_rational(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<mpq_class>> kernel(const Matrix& m) {
    auto [R, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::vector<mpq_class>> basis;
    const auto& F = m.field();
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(m.cols(), mpq_class(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(R.at(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<mpq_class>> solve(const Matrix& m, const std::vector<mpq_class>& b) {
    if (b.size() != m.rows()) throw ContractError("right-hand side has wrong length");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = m.field().reduce(b[i]);
    }
    auto [R, piv] = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<mpq_class> x(m.cols(), mpq_class(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = R.at(i, m.cols());
    return x;
}

mpq_class determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw ContractError("determinant of a non-square matrix");
    const auto& F = m.field();
    std::size_t n = m.rows();
    Matrix a = m;
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a.at(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, a.at(c, c));
        mpq_class inv = F.inv(a.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c) == 0) continue;
            mpq_class f = F.mul(a.at(i, c), inv);
            for (std::size_t j = c; j < n; ++j) a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(c, j)));
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ContractError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [R, piv] = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = R.at(i, n + j);
    return inv;
}

Matrix coeff_matrix(const std::vector<Polynomial>& polys, int d) {
    if (polys.empty()) throw ContractError("coeff_matrix needs at least one polynomial");
    const RingPtr& ring = polys[0].ring();
    const auto& basis = graded_basis(ring->nvars(), d);
    Matrix m(ring->field(), polys.size(), basis.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& [mon, c] : polys[i].terms()) {
            if (static_cast<int>(mon.deg) != d)
                throw ContractError("coeff_matrix: polynomial " + std::to_string(i) + " is not homogeneous of degree " + std::to_string(d));
            m.at(i, graded_basis_index(ring->nvars(), d, mon)) = c;
        }
    }
    return m;
}

Polynomial poly_from_coeffs(const RingPtr& ring, int d, const std::vector<mpq_class>& coeffs, std::size_t offset) {
    const auto& basis = graded_basis(ring->nvars(), d);
    Polynomial p(ring);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (coeffs.at(offset + j) != 0) p.add_term(basis[j], ring->field().reduce(coeffs[offset + j]));
    return p;
}

}  // namespace symcanon
