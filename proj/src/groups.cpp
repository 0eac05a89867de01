#include "affsub/groups.hpp"

#include "affsub/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace affsub {

namespace {

constexpr std::size_t kBuckets = 1024;

Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
    // Column j carries e_j to e_{perm[j]}.
    Matrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
    return m;
}

} // namespace

bool is_orthogonal(const Matrix& m) {
    if (!m.is_square()) return false;
    return m * m.transpose() == Matrix::identity(m.rows());
}

GroupElement::GroupElement(Matrix m) {
    if (!m.is_square()) throw InputError("group element must be square, got " + std::to_string(m.rows()) +
                                         "x" + std::to_string(m.cols()));
    if (!is_orthogonal(m)) throw InputError("group element is not orthogonal: " + m.str());
    matrix_ = std::make_shared<const Matrix>(std::move(m));
}

GroupElement::GroupElement(Matrix m, Trusted) : matrix_(std::make_shared<const Matrix>(std::move(m))) {}

GroupElement GroupElement::inverse() const { return GroupElement(matrix_->transpose(), Trusted{}); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.dim() != b.dim()) throw InputError("group element dimension mismatch");
    return GroupElement(a.matrix() * b.matrix(), GroupElement::Trusted{});
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const Matrix& m) const {
    if (buckets_.empty()) return std::nullopt;
    for (auto i : buckets_[m.hash() % kBuckets])
        if (elements_[i].matrix() == m) return i;
    return std::nullopt;
}

bool FiniteMatrixGroup::insert(const GroupElement& g) {
    if (buckets_.empty()) buckets_.resize(kBuckets);
    auto& bucket = buckets_[g.matrix().hash() % kBuckets];
    for (auto i : bucket)
        if (elements_[i] == g) return false;
    bucket.push_back(elements_.size());
    elements_.push_back(g);
    return true;
}

FiniteMatrixGroup close_group(const std::vector<GroupElement>& generators, std::size_t cap, std::string label) {
    if (generators.empty()) throw InputError("close_group: empty generator list");
    const std::size_t n = generators.front().dim();
    for (const auto& g : generators)
        if (g.dim() != n) throw InputError("close_group: generators have different dimensions");

    FiniteMatrixGroup group(n, std::move(label));
    group.insert(GroupElement(Matrix::identity(n)));
    // Breadth-first: every element is a word in the generators, and for a finite
    // group right-multiplying by generators alone reaches inverses too.
    for (std::size_t next = 0; next < group.elements_.size(); ++next) {
        for (const auto& s : generators) {
            GroupElement product = group.elements_[next] * s;
            if (group.insert(product) && group.elements_.size() > cap) {
                std::ostringstream msg;
                msg << "group too large: closure exceeds cap of " << cap << " elements";
                throw CapError(msg.str());
            }
        }
    }
    return group;
}

FiniteMatrixGroup from_enumerated(std::size_t dim, std::vector<GroupElement> elements, std::string label) {
    FiniteMatrixGroup group(dim, std::move(label));
    for (auto& e : elements) group.insert(e);
    return group;
}

FiniteMatrixGroup cyclic_regular(std::size_t m) {
    if (m == 0) throw InputError("cyclic group order must be >= 1");
    std::vector<GroupElement> elements;
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<std::size_t> perm(m);
        for (std::size_t j = 0; j < m; ++j) perm[j] = (j + k) % m;
        elements.emplace_back(permutation_matrix(perm));
    }
    return from_enumerated(m, std::move(elements), "cyclic:" + std::to_string(m) + ":regular");
}

FiniteMatrixGroup symmetric_natural(std::size_t m) {
    if (m == 0) throw InputError("symmetric group degree must be >= 1");
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<GroupElement> elements;
    do {
        elements.emplace_back(permutation_matrix(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return from_enumerated(m, std::move(elements), "symmetric:" + std::to_string(m) + ":natural");
}

FiniteMatrixGroup hyperoctahedral(std::size_t m) {
    if (m == 0) throw InputError("hyperoctahedral degree must be >= 1");
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<GroupElement> elements;
    do {
        for (std::size_t signs = 0; signs < (std::size_t{1} << m); ++signs) {
            Matrix g(m, m);
            for (std::size_t j = 0; j < m; ++j) g(perm[j], j) = (signs >> j) & 1 ? -1 : 1;
            elements.emplace_back(std::move(g));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return from_enumerated(m, std::move(elements), "hyperoctahedral:" + std::to_string(m));
}

FiniteMatrixGroup rotation2d_c4() {
    const Matrix r90{{0, -1}, {1, 0}};
    std::vector<GroupElement> elements;
    Matrix power = Matrix::identity(2);
    for (int k = 0; k < 4; ++k) {
        elements.emplace_back(power);
        power = r90 * power;
    }
    return from_enumerated(2, std::move(elements), "c4:rotation2d");
}

void validate_cayley_table(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t k = table.size();
    if (k == 0) throw InputError("cayley table is empty");
    if (k > kMaxCayleyOrder)
        throw InputError("cayley table order " + std::to_string(k) + " exceeds validation limit " +
                         std::to_string(kMaxCayleyOrder));
    for (std::size_t a = 0; a < k; ++a) {
        if (table[a].size() != k)
            throw InputError("cayley table row " + std::to_string(a + 1) + " has " +
                             std::to_string(table[a].size()) + " entries, expected " + std::to_string(k));
        for (std::size_t b = 0; b < k; ++b)
            if (table[a][b] >= k)
                throw InputError("cayley table entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                 ") out of range");
    }

    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < k && !identity; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < k && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) identity = e;
    }
    if (!identity) throw InputError("cayley table has no identity element");

    for (std::size_t a = 0; a < k; ++a) {
        bool has_inverse = false;
        for (std::size_t b = 0; b < k && !has_inverse; ++b)
            has_inverse = table[a][b] == *identity && table[b][a] == *identity;
        if (!has_inverse) throw InputError("cayley table: element " + std::to_string(a + 1) + " has no inverse");
    }

    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InputError("cayley table is not associative at triple (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + "," + std::to_string(c + 1) + ")");
}

FiniteMatrixGroup regular_from_cayley(const std::vector<std::vector<std::size_t>>& table) {
    validate_cayley_table(table);
    const std::size_t k = table.size();
    std::vector<GroupElement> elements;
    for (std::size_t a = 0; a < k; ++a) {
        // L_a e_h = e_{a h}
        std::vector<std::size_t> perm(k);
        for (std::size_t h = 0; h < k; ++h) perm[h] = table[a][h];
        elements.emplace_back(permutation_matrix(perm));
    }
    // Put the identity first, keeping the table order otherwise.
    auto id = std::find(elements.begin(), elements.end(), GroupElement(Matrix::identity(k)));
    std::rotate(elements.begin(), id, id + 1);
    return from_enumerated(k, std::move(elements), "cayley:order" + std::to_string(k));
}

ElementTuple tuple_from_indices(const FiniteMatrixGroup& g, const std::vector<std::size_t>& indices) {
    ElementTuple t;
    t.indices = indices;
    t.elements.reserve(indices.size());
    for (auto i : indices) t.elements.push_back(g.element(i));
    return t;
}

TupleEnumerator::TupleEnumerator(const FiniteMatrixGroup& group, std::size_t arity, TupleMode mode)
    : group_(&group), arity_(arity), mode_(mode) {
    if (arity == 0) throw InputError("tuple arity must be >= 1");
    if (mode.kind == TupleMode::Kind::Sampled) {
        size_ = mode.count;
        return;
    }
    std::uint64_t total = 1;
    const std::uint64_t order = group.order();
    for (std::size_t i = 0; i < arity; ++i) {
        if (total > mode.cap / order) {
            std::ostringstream msg;
            msg << "tuple space too large: " << order << "^" << arity << " exceeds cap of " << mode.cap
                << "; use sampled mode";
            throw CapError(msg.str());
        }
        total *= order;
    }
    size_ = total;
}

std::vector<std::size_t> TupleEnumerator::indices_at(std::uint64_t i) const {
    std::vector<std::size_t> idx(arity_);
    const std::uint64_t order = group_->order();
    if (mode_.kind == TupleMode::Kind::Exhaustive) {
        for (std::size_t s = arity_; s-- > 0;) {
            idx[s] = static_cast<std::size_t>(i % order);
            i /= order;
        }
        return idx;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(mode_.seed), static_cast<std::uint32_t>(mode_.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint64_t> pick(0, order - 1);
    for (auto& x : idx) x = static_cast<std::size_t>(pick(rng));
    return idx;
}

std::vector<ElementTuple> enumerate_tuples(const FiniteMatrixGroup& g, std::size_t arity, TupleMode mode) {
    TupleEnumerator e(g, arity, mode);
    std::vector<ElementTuple> out;
    out.reserve(static_cast<std::size_t>(e.size()));
    for (std::uint64_t i = 0; i < e.size(); ++i) out.push_back(e.at(i));
    return out;
}

Subspace fixed_subspace(const ElementTuple& t) {
    if (t.size() == 0) throw InputError("fixed_subspace: empty tuple");
    const std::size_t n = t.dim();
    Matrix stacked(n * t.size(), n);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 0; k < t.size(); ++k) {
        const Matrix diff = t[k].matrix() - id;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(k * n + r, c) = diff(r, c);
    }
    return kernel_basis(stacked);
}

} // namespace affsub
