#include "affsub/linalg.hpp"

#include "affsub/errors.hpp"

#include <utility>

namespace affsub {

Echelon row_reduce(Matrix m) {
    Echelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && m(r, c).is_zero()) ++r;
        if (r == rows) continue;
        if (r != pivot_row)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));

        const Rational inv = Rational(1) / m(pivot_row, c);
        for (std::size_t j = c; j < cols; ++j) m(pivot_row, j) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || m(i, c).is_zero()) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(pivot_row, j).is_zero()) m(i, j) -= factor * m(pivot_row, j);
        }
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) {
    // Forward elimination only; no back substitution needed for the count.
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && a(r, c).is_zero()) ++r;
        if (r == rows) continue;
        if (r != pivot_row)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(r, j), a(pivot_row, j));
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (a(i, c).is_zero()) continue;
            const Rational factor = a(i, c) / a(pivot_row, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(pivot_row, j).is_zero()) a(i, j) -= factor * a(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_)
        if (v.size() != ambient_dim_) throw InputError("subspace basis vector has wrong length");
    if (!basis_.empty() && rank(Matrix::from_rows(ambient_dim_, basis_)) != basis_.size())
        throw InputError("subspace basis is linearly dependent");
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw InputError("subspace vector has wrong length");
        if (!subspace_contains(s, v)) s.basis_.push_back(v);
    }
    return s;
}

Subspace kernel_basis(const Matrix& m) {
    const Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;

    Subspace out(cols);
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (x != Rational(1)) {
                const Rational inv = Rational(1) / x;
                for (auto& y : v) y *= inv;
            }
            break;
        }
        basis.push_back(std::move(v));
    }
    // Free-column vectors are independent by construction (unit in their own slot).
    return Subspace(cols, std::move(basis));
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) throw InputError("solve: rhs length does not match row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const Echelon e = row_reduce(std::move(aug));
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.reduced(i, m.cols());
    return x;
}

bool subspace_contains(const Subspace& s, const Vector& v) {
    if (v.size() != s.ambient_dim()) throw InputError("subspace_contains: vector length mismatch");
    if (is_zero(v)) return true;
    if (s.dim() == 0) return false;
    std::vector<Vector> rows = s.basis();
    rows.push_back(v);
    return rank(Matrix::from_rows(s.ambient_dim(), rows)) == s.dim();
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw InputError("determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && a(r, c).is_zero()) ++r;
        if (r == n) return Rational(0);
        if (r != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(a(r, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const Rational factor = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
        }
    }
    return det;
}

} // namespace affsub
