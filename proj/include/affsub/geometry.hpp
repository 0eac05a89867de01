#ifndef AFFSUB_GEOMETRY_HPP
#define AFFSUB_GEOMETRY_HPP

#include "affsub/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace affsub {

/// x -> linear * x + offset
struct AffineMap {
    Matrix linear;
    Vector offset;

    Vector apply(const Vector& x) const { return linear * x + offset; }
};

/// x_0, ..., x_{d+1} in Q^N.
class PointConfiguration {
public:
    /// Throws InputError unless there are exactly d+2 points of one common
    /// length N >= 1 and, when `spherical`, every point has squared norm exactly 1.
    PointConfiguration(std::size_t d, std::vector<Vector> points, bool spherical = false);

    std::size_t intrinsic_dim() const { return d_; }
    std::size_t ambient_dim() const { return points_.front().size(); }
    bool spherical() const { return spherical_; }
    const std::vector<Vector>& points() const { return points_; }
    const Vector& point(std::size_t k) const { return points_.at(k); }

    /// Image under an affine map; the spherical flag is dropped.
    PointConfiguration transformed(const AffineMap& s) const;

    /// Canonical text used for digests: points as rational strings.
    std::string canonical_text() const;

private:
    std::size_t d_;
    std::vector<Vector> points_;
    bool spherical_;
};

/// Coordinates of x_{d+1} in the affine frame (x_0; x_1 - x_0, ..., x_d - x_0).
struct AlphaCoordinates {
    Vector values;

    std::size_t size() const { return values.size(); }
    const Rational& operator[](std::size_t k) const { return values[k]; }
    friend bool operator==(const AlphaCoordinates&, const AlphaCoordinates&) = default;
};

/// True iff p_i - p_0 (i >= 1) are linearly independent.
/// Throws InputError for an empty list or unequal lengths.
bool affinely_independent(const std::vector<Vector>& points);

/// The normalization map: solves x_{d+1} - x_0 = sum_k alpha_k (x_k - x_0).
/// Throws DegenerateConfiguration if x_0..x_d are affinely dependent; returns
/// nullopt if x_{d+1} is outside their affine hull (only possible when N > d).
std::optional<AlphaCoordinates> phi(const PointConfiguration& config);

/// Affine T : Q^N -> Q^d with T(x_0) = 0 and T(x_k) = e_k for k = 1..d.
/// Uses a left inverse of the frame matrix, so it is exact on the affine hull.
/// Throws DegenerateConfiguration like phi.
AffineMap normalizing_map(const PointConfiguration& config);

/// (2t, |t|^2 - 1) / (|t|^2 + 1), a point of the unit sphere in Q^{len(t)+1}.
Vector inverse_stereographic(const Vector& t);

/// Exact rational point on S^{d-1}: t in Q^{d-1} with numerators uniform in
/// [-denom_bound, denom_bound] and denominators uniform in [1, denom_bound].
Vector sample_sphere_point(std::size_t d, std::uint64_t denom_bound, std::mt19937_64& rng);

struct SampledConfiguration {
    PointConfiguration config;
    std::uint64_t degenerate_resamples = 0;
};

/// d+2 sphere points for trial `trial`, a pure function of (d, denom_bound,
/// seed, trial). Draws whose prefix x_0..x_d is affinely dependent, or whose
/// last point repeats an earlier one, are redrawn and counted. Throws CapError
/// after 100000 redraws.
SampledConfiguration sample_spherical_configuration(std::size_t d, std::uint64_t denom_bound, std::uint64_t seed,
                                                    std::uint64_t trial);

/// True iff p lies in the convex hull of `others` (exact Phase-I simplex, Bland's rule).
bool in_convex_hull(const Vector& p, const std::vector<Vector>& others);

/// True iff no point lies in the convex hull of the remaining points.
bool convex_position(const std::vector<Vector>& points);

} // namespace affsub

#endif
