#include "support.hpp"

#include <doctest.h>

using namespace ccs;
using ccs::test::build;
using ccs::test::cell;

namespace {

std::vector<Cell> all_cells(const ChainComplex& c)
{
    std::vector<Cell> out;
    for (unsigned v = 0; v <= c.order(); ++v)
        for (const Cell& e : c.cells(v))
            out.push_back(e);
    return out;
}

// Closure by repeated application of bd, as an independent check.
std::set<Cell> naive_closure(const ChainComplex& c, Cell e)
{
    std::set<Cell> out{e};
    std::vector<Cell> todo{e};
    while (!todo.empty()) {
        Cell x = todo.back();
        todo.pop_back();
        for (const Cell& y : c.bd(x))
            if (out.insert(y).second)
                todo.push_back(y);
    }
    return out;
}

}  // namespace

TEST_CASE("building complexes")
{
    auto c = load_fixture("ex_4_4");
    CHECK(c.order() == 2);
    CHECK(c.rank(2) == 3);
    CHECK(c.boundary(2).at(0, 0) == 1);
    CHECK(c.boundary(2).at(1, 0) == 1);

    auto points = build({{2}, {}});
    CHECK(points.order() == 0);
    CHECK(points.rank(0) == 2);
    CHECK(points.boundary(0).rows() == 0);

    // d1 d2 e2_1 = 2 e0_1.
    try {
        build({{1, 2, 1}, {{1, 1, {{1, 1}}}, {1, 2, {{1, 1}}}, {2, 1, {{1, 1}, {2, 1}}}}});
        FAIL("expected a boundary failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundaryConditionViolated);
        CHECK(e.degree == 1u);
        CHECK(e.index == 0u);
    }

    CHECK_THROWS_AS(build({{1, 0}}), Error);
    try {
        build_complex(Ring::integers(), {{"a"}, {"b"}}, {{1, 0, 3, Scalar(1)}});
        FAIL("expected a dangling reference");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DanglingReference);
    }
}

TEST_CASE("support and boundary support")
{
    auto c = load_fixture("ex_4_3");
    CHECK(support(c, Chain{0, {}}).empty());
    CHECK(support(c, make_chain(c, 0, {{0, 2}, {1, -3}})) == std::vector<Cell>{cell(0, 1), cell(0, 2)});

    auto f5 = build({{2}, {}}, Ring::prime_field(5));
    CHECK(support(f5, make_chain(f5, 0, {{0, 5}})).empty());

    CHECK(boundary_support(c, make_chain(c, 1, {{0, 1}})) == std::vector<Cell>{cell(0, 1), cell(0, 2)});
    CHECK(boundary_support(c, make_chain(c, 1, {{0, 1}, {1, 1}})).empty());
    CHECK(boundary_support(c, make_chain(c, 0, {{0, 1}, {1, 4}})).empty());
}

TEST_CASE("generated subcomplexes")
{
    auto c = load_fixture("ex_4_3");
    CHECK(cells_of(c, generated_subcomplex(c, cell(2, 1))) ==
          std::vector<Cell>{cell(0, 1), cell(0, 2), cell(1, 1), cell(1, 2), cell(2, 1)});
    CHECK(cells_of(c, generated_subcomplex(c, cell(0, 1))) == std::vector<Cell>{cell(0, 1)});

    auto tri = load_fixture("ex_4_2");
    CHECK(generated_subcomplex(tri, cell(2, 1)).count() == tri.size());

    for (const char* name : {"ex_4_4", "ex_4_5", "ex_6_1_2", "ex_6_1_6"}) {
        auto x = load_fixture(name);
        for (const Cell& e : all_cells(x)) {
            auto got = cells_of(x, generated_subcomplex(x, e));
            auto want = naive_closure(x, e);
            CHECK(std::set<Cell>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("skeletons")
{
    auto c = load_fixture("ex_4_4");
    auto top = skeleton(c, 2);
    CHECK(top.order() == 2);
    CHECK(top.boundary(2) == c.boundary(2));

    auto s0 = skeleton(c, 0);
    CHECK(s0.order() == 0);
    CHECK(s0.rank(0) == c.rank(0));

    auto s1 = skeleton(c, 1);
    CHECK(s1.order() == 1);
    CHECK(s1.boundary(1) == c.boundary(1));
    CHECK(s1.labels()[1] == c.labels()[1]);
}

TEST_CASE("purity")
{
    CHECK(is_pure(load_fixture("ex_4_4")));
    CHECK(is_pure(build({{2}, {}})));
    CHECK_FALSE(is_pure(build({{3, 1}, {{1, 1, {{1, -1}, {2, 1}}}}})));
    CHECK_FALSE(is_pure(load_fixture("ex_6_1_3")));
    CHECK(is_pure(load_fixture("ex_6_1_5")));
}

TEST_CASE("maximal elements")
{
    CHECK(maximal_elements(load_fixture("ex_4_4")) == std::vector<Cell>{cell(2, 1), cell(2, 2), cell(2, 3)});
    CHECK(maximal_elements(build({{2}, {}})) == std::vector<Cell>{cell(0, 1), cell(0, 2)});
    CHECK(maximal_elements(build({{2, 1}, {{1, 1, {{1, 1}}}}})) == std::vector<Cell>{cell(1, 1), cell(0, 2)});
}

TEST_CASE("simplicial complexes")
{
    auto t = from_simplicial({{1, 2, 3}});
    CHECK(t.order() == 2);
    CHECK(t.rank(2) == 1);
    CHECK(t.rank(1) == 3);
    CHECK(t.rank(0) == 3);
    std::vector<Scalar> col;
    for (const auto& [i, x] : t.boundary(2).column(0))
        col.push_back(x);
    CHECK(col == std::vector<Scalar>{1, -1, 1});

    auto two = from_simplicial({{1, 2, 3}, {2, 3, 4}});
    CHECK(two.rank(2) == 2);
    CHECK(two.rank(1) == 5);
    CHECK(two.rank(0) == 4);
    CHECK(multiply(two.boundary(1), two.boundary(2)).is_zero());

    auto pt = from_simplicial({{1}});
    CHECK(pt.order() == 0);
    CHECK(pt.rank(0) == 1);
}

TEST_CASE("subcomplex rejects sets that are not closed")
{
    auto c = load_fixture("ex_4_3");
    auto s = c.empty_set();
    s.set(c.flat(cell(1, 1)));
    CHECK_THROWS_AS(subcomplex(c, s), Error);
    auto closed = generated_subcomplex(c, cell(1, 1));
    auto sub = subcomplex(c, closed);
    CHECK(sub.order() == 1);
    CHECK(sub.rank(0) == 2);
    CHECK(sub.rank(1) == 1);
}
