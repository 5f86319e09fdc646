#include "support.hpp"

#include <doctest.h>

using namespace ccs;
using ccs::test::build;

namespace {

std::vector<std::string> text(const ChainComplex& c, const std::vector<FGModule>& h)
{
    std::vector<std::string> out;
    for (const auto& m : h)
        out.push_back(to_string(m, c.ring()));
    return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("homology of the worked examples")
{
    auto c = load_fixture("ex_6_1_2");
    CHECK(text(c, homology(c)) == Strings{"Z", "0", "0"});
    c = load_fixture("ex_6_1_4");
    CHECK(text(c, homology(c)) == Strings{"Z", "Z", "0"});
    // Two edges with boundaries e0_1 - e0_2 and e0_1 + e0_2: d_1 is
    // invertible over Q with determinant 2.
    c = load_fixture("ex_5_1_3_k2");
    CHECK(text(c, homology(c)) == Strings{"Z/2", "0"});
    c = load_fixture("ex_5_1_3");
    CHECK(text(c, homology(c)) == Strings{"Z + Z/2", "0"});
    c = load_fixture("ex_5_1_2");
    CHECK(text(c, homology(c)) == Strings{"Z^2", "Z"});
}

TEST_CASE("torsion agrees with dense elimination")
{
    for (const auto& f : embedded_fixture_files()) {
        auto c = load_fixture(f.name);
        CHECK_MESSAGE(homology(c) == dense_homology_oracle(c), f.name);
    }
    // d e1_1 = 2e0_1 + e0_2, d e1_2 = e0_1 + 2e0_2: the image has index 3.
    auto c = load_fixture("ex_6_1_1");
    CHECK(text(c, dense_homology_oracle(c)) == Strings{"Z/3", "0"});
    CHECK(text(c, homology(c)) == Strings{"Z/3", "0"});
}

TEST_CASE("homology depends on the ring")
{
    auto c = load_fixture("ex_6_1_1");
    auto q = to_complex(to_document(c), std::string("Q"));
    CHECK(homology(q)[0].is_zero());
    auto f3 = to_complex(to_document(c), std::string("Fp:3"));
    CHECK(homology(f3)[0].free_rank == 1);
    CHECK(homology(f3)[1].free_rank == 1);
}

TEST_CASE("zero maps")
{
    auto c = build({{3}, {}});
    REQUIRE(homology(c).size() == 1);
    CHECK(homology(c)[0] == FGModule{3, {}});

    auto h = sequence_homology(Ring::integers(), {2, 2}, {SparseMatrix(Ring::integers(), 2, 2)});
    CHECK(h == std::vector<FGModule>{{2, {}}, {2, {}}});
}

TEST_CASE("module text")
{
    FGModule m{2, {mpz_class(2), mpz_class(6)}};
    CHECK(to_string(m, Ring::integers()) == "Z^2 + Z/2 + Z/6");
    CHECK(parse_module("Z^2 + Z/2 + Z/6") == m);
    CHECK(parse_module("0").is_zero());
    CHECK(to_string(FGModule{1, {}}, Ring::rationals()) == "Q");
    CHECK_THROWS_AS(parse_module("Z^x"), Error);
}

TEST_CASE("augmentations")
{
    CHECK_FALSE(build_augmentation(build({{1, 1}, {{1, 1, {{1, 1}}}}})));

    auto points = build({{2}, {}});
    auto eps = build_augmentation(points);
    REQUIRE(eps);
    CHECK(eps->values == Vector{1, 1});

    auto c = load_fixture("ex_4_3");
    eps = build_augmentation(c);
    REQUIRE(eps);
    CHECK_NOTHROW(check_augmentation(c, *eps));
    CHECK(eps->values[0] == eps->values[1]);
    CHECK_NOTHROW(check_augmentation(c, Augmentation{{1, 1}}));
    CHECK_THROWS_AS(check_augmentation(c, Augmentation{{1, 2}}), Error);
    CHECK_THROWS_AS(check_augmentation(c, Augmentation{{0, 0}}), Error);
}

TEST_CASE("augmentations exist exactly when no boundary has one-element support")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto c = ccs::test::seeded(seed);
        auto eps = build_augmentation(c);
        if (eps)
            CHECK_NOTHROW(check_augmentation(c, *eps));
        CHECK(eps.has_value() == (min_boundary_support(c) >= 2));
        auto spiked = ccs::test::with_single_support_edge(c);
        CHECK_FALSE(build_augmentation(spiked));
    }
}

TEST_CASE("minimal boundary support")
{
    CHECK(min_boundary_support(build({{1, 1}, {{1, 1, {{1, 1}}}}})) == 1);
    CHECK(min_boundary_support(load_fixture("ex_4_3")) == 2);
    CHECK(min_boundary_support(build({{2}, {}})) == kInfiniteSupport);
    CHECK(min_boundary_support(build({{2, 1}, {}})) == kInfiniteSupport);
}

TEST_CASE("reduced homology")
{
    auto points = build({{2}, {}});
    CHECK(reduced_homology(points, Augmentation{{1, 1}}) == std::vector<FGModule>{{1, {}}});

    auto c = load_fixture("ex_6_1_4");
    auto eps = build_augmentation(c);
    REQUIRE(eps);
    auto h = reduced_homology(c, *eps);
    CHECK(text(c, h) == Strings{"0", "Z", "0"});

    auto a = load_fixture("ex_4_5");
    auto ea = build_augmentation(a);
    REQUIRE(ea);
    for (const auto& m : reduced_homology(a, *ea))
        CHECK(m.is_zero());
}

TEST_CASE("acyclicity")
{
    CHECK(is_acyclic(load_fixture("ex_4_5")));
    CHECK_FALSE(is_acyclic(load_fixture("ex_6_1_1")));
    CHECK(is_acyclic(build({{2, 1}, {{1, 1, {{1, 2}, {2, 3}}}}})));
    CHECK_FALSE(is_acyclic(build({{2}, {}})));
}
