#include "affsub/errors.hpp"
#include "affsub/geometry.hpp"

#include <optional>

namespace affsub {

namespace {

// Phase-I simplex over Q for { lambda >= 0 : A lambda = b }, Bland's rule.
// Returns true iff the system is feasible.
bool feasible(const Matrix& a, const Vector& b) {
    const std::size_t m = a.rows();
    const std::size_t k = a.cols();
    const std::size_t width = k + m + 1; // structural | artificial | rhs
    const std::size_t rhs = k + m;

    Matrix t(m, width);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i].sign() < 0;
        for (std::size_t j = 0; j < k; ++j) t(i, j) = flip ? -a(i, j) : a(i, j);
        t(i, k + i) = 1;
        t(i, rhs) = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;
    auto cost = [&](std::size_t j) { return j >= k ? Rational(1) : Rational(0); };

    for (;;) {
        // Bland: lowest-index column with negative reduced cost enters.
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < k + m && !entering; ++j) {
            Rational reduced = cost(j);
            for (std::size_t i = 0; i < m; ++i)
                if (!t(i, j).is_zero()) reduced -= cost(basis[i]) * t(i, j);
            if (reduced.sign() < 0) entering = j;
        }
        if (!entering) break;
        const std::size_t e = *entering;

        // Ratio test; ties go to the lowest-index basic variable.
        std::optional<std::size_t> leave;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t(i, e).sign() <= 0) continue;
            const Rational ratio = t(i, rhs) / t(i, e);
            if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                leave = i;
                best = ratio;
            }
        }
        // Phase I is bounded below by 0, so a negative reduced cost always has a pivot row.
        const std::size_t r = *leave;
        const Rational inv = Rational(1) / t(r, e);
        for (std::size_t j = 0; j < width; ++j) t(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t(i, e).is_zero()) continue;
            const Rational factor = t(i, e);
            for (std::size_t j = 0; j < width; ++j)
                if (!t(r, j).is_zero()) t(i, j) -= factor * t(r, j);
        }
        basis[r] = e;
    }

    Rational objective;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= k) objective += t(i, rhs);
    return objective.is_zero();
}

} // namespace

bool in_convex_hull(const Vector& p, const std::vector<Vector>& others) {
    if (others.empty()) return false;
    const std::size_t n = p.size();
    Matrix a(n + 1, others.size());
    Vector b(n + 1);
    for (std::size_t j = 0; j < others.size(); ++j) {
        if (others[j].size() != n) throw InputError("in_convex_hull: points have different lengths");
        for (std::size_t r = 0; r < n; ++r) a(r, j) = others[j][r];
        a(n, j) = 1;
    }
    for (std::size_t r = 0; r < n; ++r) b[r] = p[r];
    b[n] = 1;
    return feasible(a, b);
}

bool convex_position(const std::vector<Vector>& points) {
    if (points.size() < 2) throw InputError("convex_position: need at least 2 points");
    for (const auto& p : points)
        if (p.size() != points.front().size()) throw InputError("convex_position: points have different lengths");
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<Vector> others;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (in_convex_hull(points[i], others)) return false;
    }
    return true;
}

} // namespace affsub
