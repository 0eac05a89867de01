#include "affsub/geometry.hpp"

#include "affsub/errors.hpp"
#include "affsub/linalg.hpp"

#include <algorithm>
#include <string>

namespace affsub {

PointConfiguration::PointConfiguration(std::size_t d, std::vector<Vector> points, bool spherical)
    : d_(d), points_(std::move(points)), spherical_(spherical) {
    if (d_ == 0) throw InputError("d: must be >= 1");
    if (points_.size() != d_ + 2)
        throw InputError("points: expected d+2 = " + std::to_string(d_ + 2) + " points, got " +
                         std::to_string(points_.size()));
    const std::size_t n = points_.front().size();
    if (n == 0) throw InputError("points[0]: empty point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != n)
            throw InputError("points[" + std::to_string(i) + "]: expected " + std::to_string(n) + " coordinates");
        if (spherical_ && dot(points_[i], points_[i]) != Rational(1))
            throw InputError("points[" + std::to_string(i) + "]: squared norm is " +
                             dot(points_[i], points_[i]).str() + ", not 1");
    }
}

PointConfiguration PointConfiguration::transformed(const AffineMap& s) const {
    std::vector<Vector> image;
    image.reserve(points_.size());
    for (const auto& p : points_) image.push_back(s.apply(p));
    return PointConfiguration(d_, std::move(image));
}

std::string PointConfiguration::canonical_text() const {
    std::string out = "d=" + std::to_string(d_);
    for (const auto& p : points_) out += ";" + to_string(p);
    return out;
}

bool affinely_independent(const std::vector<Vector>& points) {
    if (points.empty()) throw InputError("affinely_independent: empty point list");
    const std::size_t n = points.front().size();
    std::vector<Vector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != n) throw InputError("affinely_independent: points have different lengths");
        diffs.push_back(points[i] - points[0]);
    }
    if (diffs.empty()) return true;
    return rank(Matrix::from_rows(n, diffs)) == diffs.size();
}

namespace {

Matrix frame_matrix(const PointConfiguration& config) {
    const std::size_t d = config.intrinsic_dim();
    std::vector<Vector> prefix(config.points().begin(), config.points().begin() + static_cast<std::ptrdiff_t>(d + 1));
    if (!affinely_independent(prefix))
        throw DegenerateConfiguration("degenerate configuration: x_0..x_" + std::to_string(d) +
                                      " are affinely dependent");
    std::vector<Vector> cols;
    for (std::size_t k = 1; k <= d; ++k) cols.push_back(config.point(k) - config.point(0));
    return Matrix::from_columns(config.ambient_dim(), cols);
}

} // namespace

std::optional<AlphaCoordinates> phi(const PointConfiguration& config) {
    const Matrix frame = frame_matrix(config);
    const std::size_t d = config.intrinsic_dim();
    auto alpha = solve(frame, config.point(d + 1) - config.point(0));
    if (!alpha) return std::nullopt;
    return AlphaCoordinates{std::move(*alpha)};
}

AffineMap normalizing_map(const PointConfiguration& config) {
    const Matrix frame = frame_matrix(config);
    const std::size_t d = config.intrinsic_dim();
    const std::size_t n = config.ambient_dim();
    // Left inverse (F^T F)^{-1} F^T; F has full column rank.
    const Matrix ft = frame.transpose();
    const Matrix gram = ft * frame;
    Matrix aug(d, d + n);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) aug(r, c) = gram(r, c);
        for (std::size_t c = 0; c < n; ++c) aug(r, d + c) = ft(r, c);
    }
    const Echelon e = row_reduce(std::move(aug));
    Matrix left(d, n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) left(r, c) = e.reduced(r, d + c);
    Vector offset = left * config.point(0);
    for (auto& x : offset) x = -x;
    return AffineMap{std::move(left), std::move(offset)};
}

Vector inverse_stereographic(const Vector& t) {
    const Rational norm2 = dot(t, t);
    const Rational scale = Rational(1) / (norm2 + Rational(1));
    Vector x;
    x.reserve(t.size() + 1);
    for (const auto& ti : t) x.push_back(Rational(2) * ti * scale);
    x.push_back((norm2 - Rational(1)) * scale);
    return x;
}

Vector sample_sphere_point(std::size_t d, std::uint64_t denom_bound, std::mt19937_64& rng) {
    if (d < 2) throw InputError("sample_sphere_point: d must be >= 2");
    if (denom_bound < 1) throw InputError("sample_sphere_point: denom_bound must be >= 1");
    const auto bound = static_cast<long>(denom_bound);
    std::uniform_int_distribution<long> numerator(-bound, bound);
    std::uniform_int_distribution<long> denominator(1, bound);
    Vector t;
    t.reserve(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const long p = numerator(rng);
        const long q = denominator(rng);
        t.emplace_back(p, q);
    }
    return inverse_stereographic(t);
}

SampledConfiguration sample_spherical_configuration(std::size_t d, std::uint64_t denom_bound, std::uint64_t seed,
                                                    std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                      0x5eed5u};
    std::mt19937_64 rng(seq);
    std::uint64_t discarded = 0;
    constexpr std::uint64_t kMaxDraws = 100000;
    for (;;) {
        if (discarded == kMaxDraws)
            throw CapError("sphere sampler: no usable configuration after " + std::to_string(kMaxDraws) +
                           " draws; raise denom_bound");
        std::vector<Vector> points;
        points.reserve(d + 2);
        for (std::size_t k = 0; k < d + 2; ++k) points.push_back(sample_sphere_point(d, denom_bound, rng));
        std::vector<Vector> prefix(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(d + 1));
        // An independent prefix is pairwise distinct, so only x_{d+1} can repeat a point.
        const bool repeated = std::find(prefix.begin(), prefix.end(), points.back()) != prefix.end();
        if (!repeated && affinely_independent(prefix))
            return SampledConfiguration{PointConfiguration(d, std::move(points), true), discarded};
        ++discarded;
    }
}

} // namespace affsub
