#include "affsub/errors.hpp"
#include "affsub/group_spec.hpp"
#include "affsub/groups.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace affsub;

namespace {

const Matrix kR90{{0, -1}, {1, 0}};

Matrix four_cycle() {
    Matrix m(4, 4);
    for (std::size_t j = 0; j < 4; ++j) m((j + 1) % 4, j) = 1;
    return m;
}

bool same_elements(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
    if (a.order() != b.order()) return false;
    for (const auto& g : a.elements())
        if (!b.contains(g.matrix())) return false;
    return true;
}

std::size_t factorial(std::size_t m) { return m <= 1 ? 1 : m * factorial(m - 1); }

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("affsub_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

} // namespace

TEST_CASE("group elements must be exactly orthogonal") {
    CHECK_NOTHROW(GroupElement{kR90});
    CHECK_NOTHROW(GroupElement{Matrix{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}}});
    CHECK_THROWS_AS(GroupElement(Matrix{{1, 1}, {0, 1}}), InputError);
    CHECK_THROWS_AS(GroupElement(Matrix{{1, 0, 0}, {0, 1, 0}}), InputError);
    CHECK(GroupElement(kR90).inverse().matrix() == kR90.transpose());
}

TEST_CASE("close_group examples") {
    CHECK(close_group({GroupElement(four_cycle())}).order() == 4);
    CHECK(close_group({GroupElement(Matrix::identity(3))}).order() == 1);

    // Octahedral symmetry: 3-cycle, transposition, one sign flip.
    const Matrix cycle{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    const Matrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    const Matrix flip{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto octa = close_group({GroupElement(cycle), GroupElement(swap), GroupElement(flip)});
    CHECK(octa.order() == 48);
    CHECK(octa.order() == (1u << 3) * factorial(3));
    CHECK(same_elements(octa, hyperoctahedral(3)));
    CHECK(octa.element(0).matrix() == Matrix::identity(3));
}

TEST_CASE("close_group errors") {
    CHECK_THROWS_AS(close_group({}), InputError);
    CHECK_THROWS_AS(close_group({GroupElement(kR90), GroupElement(Matrix::identity(3))}), InputError);
    try {
        close_group({GroupElement(four_cycle()), GroupElement(Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})},
                    10);
        FAIL("expected CapError");
    } catch (const CapError& e) {
        CHECK(std::string(e.what()).find("group too large") != std::string::npos);
        CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
}

TEST_CASE("builtin families") {
    const auto c3 = cyclic_regular(3);
    REQUIRE(c3.order() == 3);
    CHECK(c3.element(1).matrix() == Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(symmetric_natural(3).order() == 6);
    CHECK(hyperoctahedral(2).order() == 8);
    CHECK(same_elements(hyperoctahedral(2),
                        close_group({GroupElement(Matrix{{0, 1}, {1, 0}}), GroupElement(Matrix{{-1, 0}, {0, 1}})})));
    CHECK(same_elements(rotation2d_c4(), close_group({GroupElement(kR90)})));

    for (std::size_t m = 1; m <= 4; ++m) {
        CAPTURE(m);
        CHECK(cyclic_regular(m).order() == m);
        CHECK(symmetric_natural(m).order() == factorial(m));
        CHECK(hyperoctahedral(m).order() == (std::size_t{1} << m) * factorial(m));
    }
}

TEST_CASE("constructed groups are orthogonal and closed") {
    std::mt19937_64 rng(5);
    for (const auto& g : {cyclic_regular(5), symmetric_natural(4), hyperoctahedral(3), rotation2d_c4()}) {
        CAPTURE(g.label());
        CHECK(g.element(0).matrix() == Matrix::identity(g.dim()));
        for (const auto& e : g.elements()) CHECK(is_orthogonal(e.matrix()));
        std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
        for (int i = 0; i < 100; ++i) {
            const auto& a = g.element(pick(rng));
            const auto& b = g.element(pick(rng));
            CHECK(g.contains((a * b).matrix()));
            CHECK(g.contains(a.matrix().transpose()));
        }
        std::set<std::size_t> indices;
        for (const auto& e : g.elements()) indices.insert(*g.index_of(e.matrix()));
        CHECK(indices.size() == g.order());
    }
}

TEST_CASE("cayley tables") {
    const std::vector<std::vector<std::size_t>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    const auto g = regular_from_cayley(z3);
    CHECK(g.order() == 3);
    CHECK(same_elements(g, cyclic_regular(3)));

    const std::vector<std::vector<std::size_t>> klein{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    CHECK(regular_from_cayley(klein).order() == 4);

    // Identity listed last still ends up at index 0.
    const std::vector<std::vector<std::size_t>> z2_last{{1, 0}, {0, 1}};
    CHECK(regular_from_cayley(z2_last).element(0).matrix() == Matrix::identity(2));

    // Latin square with identity and inverses but not associative.
    const std::vector<std::vector<std::size_t>> bad{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    try {
        regular_from_cayley(bad);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("not associative at triple") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_cayley_table({{1, 1}, {1, 1}}), InputError);  // no identity
    CHECK_THROWS_AS(validate_cayley_table({{0, 1}, {1, 1}}), InputError);  // 1 has no inverse
    CHECK_THROWS_AS(validate_cayley_table({{0, 5}, {1, 0}}), InputError);
    CHECK_THROWS_AS(validate_cayley_table(std::vector<std::vector<std::size_t>>(65, std::vector<std::size_t>(65))),
                    InputError);
}

TEST_CASE("tuple enumeration") {
    const auto c4 = rotation2d_c4();
    const auto all = enumerate_tuples(c4, 3, TupleMode::exhaustive());
    CHECK(all.size() == 64);
    CHECK(all[0].indices == std::vector<std::size_t>{0, 0, 0});
    CHECK(all[1].indices == std::vector<std::size_t>{0, 0, 1});
    CHECK(all[4].indices == std::vector<std::size_t>{0, 1, 0});
    CHECK(all[63].indices == std::vector<std::size_t>{3, 3, 3});
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].indices < all[i].indices);

    const auto trivial = enumerate_tuples(cyclic_regular(1), 5, TupleMode::exhaustive());
    REQUIRE(trivial.size() == 1);
    for (const auto& g : trivial[0].elements) CHECK(g.matrix() == Matrix::identity(1));

    const auto a = enumerate_tuples(hyperoctahedral(3), 4, TupleMode::sampled(7, 10));
    const auto b = enumerate_tuples(hyperoctahedral(3), 4, TupleMode::sampled(7, 10));
    REQUIRE(a.size() == 10);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].indices == b[i].indices);
    const auto c = enumerate_tuples(hyperoctahedral(3), 4, TupleMode::sampled(8, 10));
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].indices != c[i].indices;
    CHECK(differs);

    CHECK(TupleEnumerator(symmetric_natural(4), 4, TupleMode::exhaustive()).size() == 331776);
    CHECK(TupleEnumerator(hyperoctahedral(3), 4, TupleMode::exhaustive()).size() == 5308416);
    CHECK_THROWS_AS(TupleEnumerator(hyperoctahedral(3), 4, TupleMode::exhaustive(1000)), CapError);
    CHECK_THROWS_AS(TupleEnumerator(hyperoctahedral(3), 5, TupleMode::exhaustive()), CapError);
    CHECK_THROWS_AS(TupleEnumerator(c4, 0, TupleMode::exhaustive()), InputError);
}

TEST_CASE("fixed subspace examples") {
    const auto c4 = rotation2d_c4();
    CHECK(fixed_subspace(tuple_from_indices(c4, {1, 2, 3})).dim() == 0);
    CHECK(fixed_subspace(tuple_from_indices(c4, {0, 0, 0})).dim() == 2);

    const auto s3 = symmetric_natural(3);
    const Vector ones{1, 1, 1};
    for (const auto& t : enumerate_tuples(s3, 2, TupleMode::exhaustive())) {
        const Subspace fix = fixed_subspace(t);
        CHECK(fix.dim() >= 1);
        CHECK(subspace_contains(fix, ones));
        for (const auto& b : fix.basis())
            for (const auto& g : t.elements) CHECK(g.matrix() * b == b);
    }
    CHECK_THROWS_AS(fixed_subspace(ElementTuple{}), InputError);
}

TEST_CASE("fixed subspace shrinks as elements are added") {
    const auto g = hyperoctahedral(3);
    for (const auto& t : enumerate_tuples(g, 3, TupleMode::sampled(3, 200))) {
        ElementTuple prefix{{t.elements[0], t.elements[1]}, {t.indices[0], t.indices[1]}};
        const Subspace small = fixed_subspace(t);
        const Subspace large = fixed_subspace(prefix);
        CHECK(small.dim() <= large.dim());
        for (const auto& v : small.basis()) CHECK(subspace_contains(large, v));
    }
}

TEST_CASE("group spec parsing") {
    CHECK(parse_group_spec("cyclic:5:regular").order() == 5);
    CHECK(parse_group_spec("symmetric:3:natural").order() == 6);
    CHECK(parse_group_spec("hyperoctahedral:3").order() == 48);
    CHECK(parse_group_spec("c4:rotation2d").label() == "c4:rotation2d");
    CHECK_THROWS_AS(parse_group_spec("cyclic:0:regular"), InputError);
    CHECK_THROWS_AS(parse_group_spec("cyclic:x:regular"), InputError);
    CHECK_THROWS_AS(parse_group_spec("dihedral:4"), InputError);
    CHECK_THROWS_AS(parse_group_spec("hyperoctahedral:9"), CapError);
    CHECK_THROWS_AS(parse_group_spec("cyclic:20000:regular"), CapError);
    CHECK_THROWS_AS(parse_group_spec("cayley:/nonexistent/file"), InputError);

    const auto cayley = temp_file("z4.txt", "4\n1 2 3 4\n2 3 4 1\n3 4 1 2\n4 1 2 3\n");
    const auto z4 = parse_group_spec("cayley:" + cayley);
    CHECK(z4.order() == 4);
    CHECK(z4.label() == "cayley:" + cayley);
    CHECK(same_elements(z4, cyclic_regular(4)));
    CHECK_THROWS_AS(parse_group_spec("cayley:" + temp_file("bad.txt", "2\n1 2\n2 3\n")), InputError);

    const auto expl = temp_file("gens.txt", "0 -1 0\n1 0 0\n0 0 1\n\n1 0 0\n0 1 0\n0 0 -1\n");
    CHECK(parse_group_spec("explicit:" + expl).order() == 8);
    const auto pyth = temp_file("pyth.txt", "3/5 -4/5\n4/5 3/5\n");
    CHECK_THROWS_AS(parse_group_spec("explicit:" + pyth, 50), CapError);  // infinite order rotation
    const auto nonorth = temp_file("nonorth.txt", "1 1\n0 1\n");
    try {
        parse_group_spec("explicit:" + nonorth);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("not orthogonal") != std::string::npos);
    }
}

TEST_CASE("matrix list reader") {
    std::istringstream in("1 0\n0 1\n\n\n0 1\n1 0\n");
    const auto ms = read_matrix_list(in);
    REQUIRE(ms.size() == 2);
    CHECK(ms[1] == Matrix{{0, 1}, {1, 0}});
    std::istringstream ragged("1 0\n0\n");
    CHECK_THROWS_AS(read_matrix_list(ragged), InputError);
    std::istringstream bad("1 x\n");
    CHECK_THROWS_AS(read_matrix_list(bad), InputError);
}
