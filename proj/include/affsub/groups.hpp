#ifndef AFFSUB_GROUPS_HPP
#define AFFSUB_GROUPS_HPP

#include "affsub/linalg.hpp"
#include "affsub/matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace affsub {

inline constexpr std::size_t kDefaultClosureCap = 10'000;
inline constexpr std::uint64_t kDefaultTupleCap = 10'000'000;
inline constexpr std::size_t kMaxCayleyOrder = 64;

/// An exactly orthogonal square matrix. Copies share the immutable matrix.
class GroupElement {
public:
    /// Throws InputError unless `m` is square with m * m^T == I exactly.
    explicit GroupElement(Matrix m);

    const Matrix& matrix() const { return *matrix_; }
    std::size_t dim() const { return matrix_->rows(); }
    GroupElement inverse() const;

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.matrix_ == b.matrix_ || *a.matrix_ == *b.matrix_;
    }

private:
    struct Trusted {};
    GroupElement(Matrix m, Trusted);

    std::shared_ptr<const Matrix> matrix_;
};

bool is_orthogonal(const Matrix& m);

/// A finite group of rational orthogonal n x n matrices. Element 0 is the identity.
class FiniteMatrixGroup {
public:
    std::size_t dim() const { return dim_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const GroupElement& element(std::size_t i) const { return elements_.at(i); }
    const std::string& label() const { return label_; }
    FiniteMatrixGroup relabeled(std::string label) const {
        FiniteMatrixGroup copy = *this;
        copy.label_ = std::move(label);
        return copy;
    }

    /// Index of an element equal to `m`, if any.
    std::optional<std::size_t> index_of(const Matrix& m) const;
    bool contains(const Matrix& m) const { return index_of(m).has_value(); }

    friend FiniteMatrixGroup close_group(const std::vector<GroupElement>&, std::size_t, std::string);
    friend FiniteMatrixGroup from_enumerated(std::size_t, std::vector<GroupElement>, std::string);

private:
    FiniteMatrixGroup(std::size_t dim, std::string label) : dim_(dim), label_(std::move(label)) {}
    bool insert(const GroupElement& g);

    std::size_t dim_;
    std::string label_;
    std::vector<GroupElement> elements_;
    // Hash buckets over element indices; membership still compares exactly.
    std::vector<std::vector<std::size_t>> buckets_;
};

/// Closure of the generators under multiplication. Throws InputError for an
/// empty, ragged or non-orthogonal generator list and CapError once the
/// closure would exceed `cap` elements.
FiniteMatrixGroup close_group(const std::vector<GroupElement>& generators,
                              std::size_t cap = kDefaultClosureCap, std::string label = "");

// Built-in families.
FiniteMatrixGroup cyclic_regular(std::size_t m);
FiniteMatrixGroup symmetric_natural(std::size_t m);
FiniteMatrixGroup hyperoctahedral(std::size_t m);
FiniteMatrixGroup rotation2d_c4();
/// Left regular representation from a 0-based Cayley table,
/// table[a][b] = index of a*b. Validated exhaustively (order <= 64).
FiniteMatrixGroup regular_from_cayley(const std::vector<std::vector<std::size_t>>& table);

/// Throws InputError naming the first failing check (or triple).
void validate_cayley_table(const std::vector<std::vector<std::size_t>>& table);

/// Ordered (g_1, ..., g_k). `indices` holds group indices when drawn from a group.
struct ElementTuple {
    std::vector<GroupElement> elements;
    std::vector<std::size_t> indices;

    std::size_t size() const { return elements.size(); }
    std::size_t dim() const { return elements.empty() ? 0 : elements.front().dim(); }
    const GroupElement& operator[](std::size_t i) const { return elements[i]; }
};

ElementTuple tuple_from_indices(const FiniteMatrixGroup& g, const std::vector<std::size_t>& indices);

struct TupleMode {
    enum class Kind { Exhaustive, Sampled };
    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    std::uint64_t cap = kDefaultTupleCap;

    static TupleMode exhaustive(std::uint64_t cap = kDefaultTupleCap) { return {Kind::Exhaustive, 0, 0, cap}; }
    static TupleMode sampled(std::uint64_t seed, std::uint64_t count) { return {Kind::Sampled, seed, count, 0}; }
};

/// Random-access view of the tuples of a group.
///
/// Exhaustive: |G|^arity tuples in lexicographic index order (first slot most
/// significant). Sampled: `count` tuples, tuple i a pure function of (seed, i),
/// so ranges can be handed to independent workers.
class TupleEnumerator {
public:
    /// Throws InputError if arity == 0, CapError if an exhaustive space exceeds the cap.
    TupleEnumerator(const FiniteMatrixGroup& group, std::size_t arity, TupleMode mode);

    std::uint64_t size() const { return size_; }
    std::size_t arity() const { return arity_; }
    std::vector<std::size_t> indices_at(std::uint64_t i) const;
    ElementTuple at(std::uint64_t i) const { return tuple_from_indices(*group_, indices_at(i)); }

private:
    const FiniteMatrixGroup* group_;
    std::size_t arity_;
    TupleMode mode_;
    std::uint64_t size_;
};

/// Eagerly materialized tuple list; convenient for small spaces.
std::vector<ElementTuple> enumerate_tuples(const FiniteMatrixGroup& g, std::size_t arity, TupleMode mode);

/// Fix = intersection of ker(g_k - I). Throws InputError for an empty tuple.
Subspace fixed_subspace(const ElementTuple& t);

} // namespace affsub

#endif
