#include "support.hpp"

#include <doctest.h>

using namespace ccs;
using ccs::test::cell;

namespace {

ConeWitness witness(const ChainComplex& c, Cell target, Cell tau)
{
    return ConeWitness{target, make_chain(c, tau.degree, {{tau.index, 1}}), Scalar(1)};
}

}  // namespace

TEST_CASE("given assignments")
{
    auto c = load_fixture("ex_4_2");
    ConeAssignment a;
    a.sets = {{cell(0, 1)}, {cell(1, 1), cell(1, 2)}, {cell(2, 1)}};
    a.witnesses = {witness(c, cell(1, 3), cell(2, 1)), witness(c, cell(0, 2), cell(1, 3)),
                   witness(c, cell(0, 3), cell(1, 2))};
    auto v = verify_cone(c, a);
    CHECK_MESSAGE(!v, (v ? v->condition + ": " + v->detail : ""));

    auto e3 = load_fixture("ex_4_3");
    ConeAssignment b;
    b.sets = {{cell(0, 1)}, {cell(1, 1)}, {cell(2, 1)}};
    b.witnesses = {witness(e3, cell(1, 2), cell(2, 1)), witness(e3, cell(0, 2), cell(1, 1))};
    v = verify_cone(e3, b);
    CHECK_MESSAGE(!v, (v ? v->condition + ": " + v->detail : ""));

    // A witness whose boundary misses its target.
    auto bad = b;
    bad.witnesses[1] = witness(e3, cell(0, 2), cell(2, 1));
    CHECK(verify_cone(e3, bad));

    // Dropping a witness leaves an element unexplained.
    auto missing = b;
    missing.witnesses.pop_back();
    CHECK(verify_cone(e3, missing));
}

TEST_CASE("the square is not a cone")
{
    auto c = load_fixture("ex_4_5");
    CHECK_FALSE(search_cone(c));

    ConeAssignment a;
    a.sets = {{cell(0, 1)}, {cell(1, 1), cell(1, 4)}, {cell(2, 1)}};
    a.witnesses = {witness(c, cell(1, 2), cell(2, 1)), witness(c, cell(1, 3), cell(2, 1)),
                   witness(c, cell(0, 2), cell(1, 1)), witness(c, cell(0, 4), cell(1, 4))};
    auto v = verify_cone(c, a);
    REQUIRE(v);
    CHECK(v->condition == "1b");
}

TEST_CASE("search")
{
    auto c = load_fixture("ex_4_4");
    auto a = search_cone(c);
    REQUIRE(a);
    CHECK_FALSE(verify_cone(c, *a));
    CHECK(a->sets[1].size() == 1);

    auto simplicial = load_fixture("ex_4_1");
    a = search_cone(simplicial);
    REQUIRE(a);
    CHECK_FALSE(verify_cone(simplicial, *a));

    auto e2 = load_fixture("ex_4_2");
    a = search_cone(e2);
    REQUIRE(a);
    CHECK_FALSE(verify_cone(e2, *a));
}

TEST_CASE("cones are acyclic")
{
    int cones = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto c = seed % 2 ? ccs::test::random_simplicial_cone(seed) : ccs::test::seeded(seed);
        auto a = search_cone(c);
        if (!a)
            continue;
        ++cones;
        CHECK_FALSE(verify_cone(c, *a));
        CHECK(is_acyclic(dense_homology_oracle(c)));
    }
    CHECK(cones >= 30);
}
