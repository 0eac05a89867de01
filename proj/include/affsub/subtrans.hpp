#ifndef AFFSUB_SUBTRANS_HPP
#define AFFSUB_SUBTRANS_HPP

#include "affsub/geometry.hpp"
#include "affsub/groups.hpp"
#include "affsub/linalg.hpp"

#include <optional>

namespace affsub {

/// The normalized problem: find affine f(x) = A x + b, A != 0, with
/// f(e_k) = g_k f(0) for k = 1..d and f(alpha) = g_{d+1} f(0).
struct SubtransInstance {
    AlphaCoordinates alpha;
    ElementTuple tuple;

    /// Throws InputError unless |tuple| = |alpha| + 1 >= 2 and all elements share one dimension.
    void validate() const;
    std::size_t d() const { return alpha.size(); }
    std::size_t n() const { return tuple.dim(); }
};

struct SubtransDecision {
    enum class Outcome { NoNonconstantSolution, Witness };

    Outcome outcome = Outcome::NoNonconstantSolution;
    Vector b;  // witness only
    Matrix a;  // witness only, n x d

    // Diagnostics.
    std::size_t ambient_dim = 0;   // n
    std::size_t fixed_dim = 0;     // dim Fix
    std::size_t kernel_dim = 0;    // dim ker M(alpha)
    std::size_t quotient_dim = 0;  // n' = n - dim Fix

    bool is_witness() const { return outcome == Outcome::Witness; }
};

/// M(alpha) = sum_k alpha_k (g_k - I) + (I - g_{d+1}); the b-condition reads M b = 0.
Matrix build_system(const SubtransInstance& inst);

/// Witness iff dim ker M(alpha) > dim Fix. The witness b is the first kernel
/// basis vector outside Fix, and column k of A is g_k b - b.
SubtransDecision decide(const SubtransInstance& inst);

/// A != 0, column k of A equals g_k b - b (k <= d), and
/// sum_k alpha_k (g_k b - b) + b = g_{d+1} b. All exact.
bool verify_witness(const SubtransInstance& inst, const Vector& b, const Matrix& a);

/// Brute force over the n*d + n unknowns of (A, b) straight from the
/// point conditions; true iff some solution has A != 0.
bool oracle_decide(const SubtransInstance& inst);

struct ConfigurationDecision {
    enum class Outcome { NoNonconstantSolution, Witness, NotApplicable };

    Outcome outcome = Outcome::NotApplicable;
    std::optional<AlphaCoordinates> alpha;
    std::optional<SubtransDecision> decision;
    // Witness only: f(x) = A T(x) + b on original coordinates.
    std::optional<AffineMap> map;

    bool is_witness() const { return outcome == Outcome::Witness; }
};

/// phi followed by decide. NotApplicable when x_{d+1} is off the affine hull of
/// the prefix. Throws DegenerateConfiguration for a dependent prefix and
/// InputError when |tuple| != d+1.
ConfigurationDecision decide_configuration(const PointConfiguration& config, const ElementTuple& tuple);

/// True iff f(x_k) = g_k f(x_0) exactly for k = 1..d+1 and f is nonconstant on the points.
bool verify_configuration_map(const PointConfiguration& config, const ElementTuple& tuple, const AffineMap& f);

/// (1/(2d), ..., 1/(2d)): the point where {0, e_1, ..., e_d, alpha} fails to be in convex position.
AlphaCoordinates witness_alpha(std::size_t d);

struct GenericityCertificate {
    bool passed = false;  // M(alpha*) has no kernel beyond Fix
    SubtransInstance instance;
    SubtransDecision decision;
};

/// Decides at alpha* = witness_alpha(|tuple| - 1). A pass shows that some
/// n' x n' minor of the quotient system is nonzero at alpha*, hence not
/// identically zero as a polynomial in alpha.
GenericityCertificate certify_generic(const ElementTuple& tuple);

} // namespace affsub

#endif
