#ifndef AFFSUB_LINALG_HPP
#define AFFSUB_LINALG_HPP

#include "affsub/matrix.hpp"

#include <optional>
#include <vector>

namespace affsub {

/// Reduced row echelon form plus its pivot columns.
///
/// Pivoting always takes the first row (from the current one down) with a
/// nonzero entry in the leftmost unprocessed column, so the output depends only
/// on the input matrix.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const { return pivot_columns.size(); }
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// A linear subspace of Q^ambient_dim given by an independent basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
    /// Throws InputError if a vector has the wrong length or the list is dependent.
    Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

    /// Independent subset of `vectors`, scanning in order.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

private:
    std::size_t ambient_dim_;
    std::vector<Vector> basis_;
};

/// Basis of {v : m v = 0}. One vector per free column of the echelon form, in
/// column order, each scaled so its first nonzero entry is 1.
Subspace kernel_basis(const Matrix& m);

/// One exact solution of m x = rhs, or nullopt if the system is inconsistent.
/// Free variables are set to zero. Throws InputError on a length mismatch.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Exact span membership via a rank comparison.
bool subspace_contains(const Subspace& s, const Vector& v);

/// Determinant of a square matrix (exact elimination).
Rational determinant(const Matrix& m);

} // namespace affsub

#endif
