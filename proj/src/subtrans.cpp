#include "affsub/subtrans.hpp"

#include "affsub/errors.hpp"

#include <stdexcept>

namespace affsub {

void SubtransInstance::validate() const {
    if (alpha.size() == 0) throw InputError("instance: alpha must be nonempty");
    if (tuple.size() != alpha.size() + 1)
        throw InputError("instance: tuple has " + std::to_string(tuple.size()) + " elements, expected d+1 = " +
                         std::to_string(alpha.size() + 1));
    for (const auto& g : tuple.elements)
        if (g.dim() != tuple.dim()) throw InputError("instance: tuple elements have different dimensions");
}

Matrix build_system(const SubtransInstance& inst) {
    inst.validate();
    const std::size_t n = inst.n();
    const std::size_t d = inst.d();
    const Matrix id = Matrix::identity(n);
    Matrix m = id - inst.tuple[d].matrix();
    for (std::size_t k = 0; k < d; ++k) {
        if (inst.alpha[k].is_zero()) continue;
        m += inst.alpha[k] * (inst.tuple[k].matrix() - id);
    }
    return m;
}

namespace {

Matrix witness_matrix(const SubtransInstance& inst, const Vector& b) {
    std::vector<Vector> cols;
    cols.reserve(inst.d());
    for (std::size_t k = 0; k < inst.d(); ++k) cols.push_back(inst.tuple[k].matrix() * b - b);
    return Matrix::from_columns(inst.n(), cols);
}

} // namespace

SubtransDecision decide(const SubtransInstance& inst) {
    const Matrix m = build_system(inst);
    const std::size_t n = inst.n();
    const Subspace kernel = kernel_basis(m);

    SubtransDecision out;
    out.ambient_dim = n;
    out.kernel_dim = kernel.dim();
    if (kernel.dim() == 0) {
        // Fix lies inside the kernel, so it is trivial as well.
        out.quotient_dim = n;
        return out;
    }

    const Subspace fix = fixed_subspace(inst.tuple);
    out.fixed_dim = fix.dim();
    out.quotient_dim = n - fix.dim();
    if (kernel.dim() < fix.dim()) throw std::logic_error("decide: fixed subspace larger than kernel of M(alpha)");
    if (kernel.dim() == fix.dim()) return out;

    for (const auto& v : kernel.basis()) {
        if (subspace_contains(fix, v)) continue;
        out.outcome = SubtransDecision::Outcome::Witness;
        out.b = v;
        out.a = witness_matrix(inst, v);
        return out;
    }
    throw std::logic_error("decide: kernel exceeds Fix but every basis vector is fixed");
}

bool verify_witness(const SubtransInstance& inst, const Vector& b, const Matrix& a) {
    inst.validate();
    const std::size_t n = inst.n();
    const std::size_t d = inst.d();
    if (b.size() != n || a.rows() != n || a.cols() != d) return false;
    if (a.is_zero()) return false;
    Vector lhs = b;
    for (std::size_t k = 0; k < d; ++k) {
        const Vector col = inst.tuple[k].matrix() * b - b;
        if (a.column(k) != col) return false;
        lhs = lhs + inst.alpha[k] * col;
    }
    return lhs == inst.tuple[d].matrix() * b;
}

bool oracle_decide(const SubtransInstance& inst) {
    inst.validate();
    const std::size_t n = inst.n();
    const std::size_t d = inst.d();
    const std::size_t unknowns = n * d + n;  // A column-major, then b
    auto a_index = [n](std::size_t row, std::size_t col) { return col * n + row; };
    const std::size_t b_offset = n * d;

    // f(x) - g f(0) = A x + (I - g) b
    Matrix system(n * (d + 1), unknowns);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 0; k <= d; ++k) {
        const Matrix i_minus_g = id - inst.tuple[k].matrix();
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t row = k * n + r;
            if (k < d) {
                system(row, a_index(r, k)) = 1;  // x = e_k
            } else {
                for (std::size_t j = 0; j < d; ++j) system(row, a_index(r, j)) = inst.alpha[j];  // x = alpha
            }
            for (std::size_t c = 0; c < n; ++c) system(row, b_offset + c) = i_minus_g(r, c);
        }
    }
    const Subspace solutions = kernel_basis(system);
    for (const auto& v : solutions.basis())
        for (std::size_t i = 0; i < b_offset; ++i)
            if (!v[i].is_zero()) return true;
    return false;
}

bool verify_configuration_map(const PointConfiguration& config, const ElementTuple& tuple, const AffineMap& f) {
    if (tuple.size() != config.intrinsic_dim() + 1) return false;
    const Vector f0 = f.apply(config.point(0));
    bool nonconstant = false;
    for (std::size_t k = 1; k < config.points().size(); ++k) {
        const Vector fk = f.apply(config.point(k));
        if (fk != tuple[k - 1].matrix() * f0) return false;
        if (fk != f0) nonconstant = true;
    }
    return nonconstant;
}

ConfigurationDecision decide_configuration(const PointConfiguration& config, const ElementTuple& tuple) {
    const std::size_t d = config.intrinsic_dim();
    if (tuple.size() != d + 1)
        throw InputError("tuple has " + std::to_string(tuple.size()) + " elements, expected d+1 = " +
                         std::to_string(d + 1));
    ConfigurationDecision out;
    out.alpha = phi(config);
    if (!out.alpha) {
        out.outcome = ConfigurationDecision::Outcome::NotApplicable;
        return out;
    }
    out.decision = decide(SubtransInstance{*out.alpha, tuple});
    if (!out.decision->is_witness()) {
        out.outcome = ConfigurationDecision::Outcome::NoNonconstantSolution;
        return out;
    }
    out.outcome = ConfigurationDecision::Outcome::Witness;
    const AffineMap t = normalizing_map(config);
    AffineMap f{out.decision->a * t.linear, out.decision->a * t.offset + out.decision->b};
    if (!verify_configuration_map(config, tuple, f))
        throw std::logic_error("decide_configuration: witness fails on original coordinates");
    out.map = std::move(f);
    return out;
}

AlphaCoordinates witness_alpha(std::size_t d) {
    if (d == 0) throw InputError("witness_alpha: d must be >= 1");
    return AlphaCoordinates{Vector(d, Rational(1, static_cast<long>(2 * d)))};
}

GenericityCertificate certify_generic(const ElementTuple& tuple) {
    if (tuple.size() < 2) throw InputError("certify_generic: tuple needs at least 2 elements");
    GenericityCertificate cert{false, SubtransInstance{witness_alpha(tuple.size() - 1), tuple}, {}};
    cert.decision = decide(cert.instance);
    cert.passed = !cert.decision.is_witness();
    return cert;
}

} // namespace affsub
