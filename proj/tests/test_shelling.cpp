#include "support.hpp"

#include <doctest.h>

using namespace ccs;
using ccs::test::build;
using ccs::test::cell;

namespace {

ShellingCertificate gamma_only(std::vector<Cell> order)
{
    ShellingCertificate cert;
    ShellingNode root;
    root.order = std::move(order);
    root.children.assign(root.order.size(), std::nullopt);
    cert.nodes.push_back(root);
    return cert;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("verifying shellings")
{
    auto c = load_fixture("ex_5_1_1");
    auto r = certify_shelling_order(c, maximal_elements(c));
    REQUIRE(r.certificate);
    CHECK_FALSE(verify_shelling(c, *r.certificate));

    auto e1 = load_fixture("ex_6_1_1");
    r = certify_shelling_order(e1, maximal_elements(e1));
    REQUIRE(r.certificate);
    CHECK_FALSE(verify_shelling(e1, *r.certificate));

    auto apart = from_simplicial({{1, 2, 3}, {4, 5, 6}});
    r = certify_shelling_order(apart, maximal_elements(apart));
    CHECK_FALSE(r.certificate);
    REQUIRE(r.violation);
    CHECK(r.violation->kind == ShellingViolationKind::EmptyIntersection);
    CHECK(r.violation->position == 1);
}

TEST_CASE("malformed certificates throw")
{
    auto c = load_fixture("ex_5_1_2");
    auto bad = gamma_only({cell(1, 1), cell(1, 1)});
    try {
        verify_shelling(c, bad);
        FAIL("expected a malformed certificate");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedCertificate);
    }
    auto dangling = gamma_only({cell(1, 1), cell(1, 2)});
    dangling.nodes[0].children[0] = 7;
    CHECK_THROWS_AS(verify_shelling(c, dangling), Error);
}

TEST_CASE("searching shellings")
{
    auto cycle = from_simplicial({{1, 2}, {2, 3}, {1, 3}});
    auto cert = search_shelling(cycle);
    REQUIRE(cert);
    CHECK_FALSE(verify_shelling(cycle, *cert));

    auto c = load_fixture("ex_4_4");
    cert = search_shelling(c);
    REQUIRE(cert);
    CHECK_FALSE(verify_shelling(c, *cert));

    auto edges = from_simplicial({{1, 2}, {3, 4}});
    CHECK_FALSE(search_shelling(edges));
    CHECK(brute_shellings(edges).empty());
}

TEST_CASE("search agrees with exhaustive enumeration")
{
    int shellable = 0, not_shellable = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto c = seed % 2 ? ccs::test::random_facet_family(seed) : ccs::test::seeded(seed);
        std::vector<ShellingCertificate> all;
        try {
            all = brute_shellings(c);
        } catch (const Error&) {
            continue;
        }
        auto cert = search_shelling(c);
        CHECK(cert.has_value() == !all.empty());
        if (cert) {
            CHECK_FALSE(verify_shelling(c, *cert));
            ++shellable;
        } else {
            ++not_shellable;
        }
        for (const auto& b : all)
            CHECK_FALSE(verify_shelling(c, b));
    }
    CHECK(shellable > 10);
    CHECK(not_shellable > 3);
}

TEST_CASE("every ordering of points is a shelling")
{
    for (std::size_t k = 1; k <= 4; ++k) {
        auto c = build({{k}, {}});
        CHECK(brute_shellings(c).size() == factorial(k));
    }
}

TEST_CASE("failures")
{
    CHECK(failures(gamma_only({cell(2, 1), cell(1, 1), cell(2, 2)})) ==
          std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}});
    CHECK(failures(gamma_only({cell(1, 1), cell(2, 1), cell(2, 2)})) ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}});

    auto c = load_fixture("ex_4_4");
    auto cert = search_shelling(c);
    REQUIRE(cert);
    CHECK(failures(*cert).empty());
}

TEST_CASE("monotonization")
{
    // An isolated vertex never meets a later element, so an edge after a
    // stray vertex violates the first condition.
    auto c = from_simplicial({{1, 2}, {3}});
    const Cell edge = cell(1, 1), vertex = cell(0, 3);
    auto r = certify_shelling_order(c, {vertex, edge});
    CHECK_FALSE(r.certificate);
    REQUIRE(r.violation);
    CHECK(r.violation->kind == ShellingViolationKind::EmptyIntersection);
    r = certify_shelling_order(c, {edge, vertex});
    REQUIRE(r.certificate);
    CHECK(failures(*r.certificate).empty());
    auto same = monotonize(c, *r.certificate);
    CHECK(same.gamma_order() == r.certificate->gamma_order());

    // Triangles 123 and 235 with the pendant edge 34 between them.
    auto t = from_simplicial({{1, 2, 3}, {3, 4}, {2, 3, 5}});
    auto gamma = maximal_elements(t);
    REQUIRE(gamma.size() == 3);
    const std::vector<Cell> low_middle{gamma[0], gamma[2], gamma[1]};
    r = certify_shelling_order(t, low_middle);
    REQUIRE(r.certificate);
    CHECK(failures(*r.certificate).size() == 1);

    auto steps = monotonize_steps(t, *r.certificate);
    REQUIRE(steps.size() == 2);
    for (const auto& s : steps)
        CHECK_FALSE(verify_shelling(t, s));
    CHECK(failures(steps.back()).empty());
    CHECK(steps.back().gamma_order() == gamma);

    // Every ordering of Gamma, tried directly: the four orders that do not
    // start with the pendant edge are valid.
    std::vector<std::vector<Cell>> valid;
    auto perm = gamma;
    std::sort(perm.begin(), perm.end());
    do {
        if (certify_shelling_order(t, perm).certificate)
            valid.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(valid.size() == 4);
    CHECK(std::find(valid.begin(), valid.end(), steps.back().gamma_order()) != valid.end());
}

TEST_CASE("skeleton shellings")
{
    auto tri = from_simplicial({{1, 2, 3}});
    auto cert = search_shelling(tri);
    REQUIRE(cert);
    auto same = skeleton_shelling(tri, *cert, 2);
    CHECK_FALSE(verify_shelling(tri, same));

    auto s1 = skeleton(tri, 1);
    auto one = skeleton_shelling(tri, *cert, 1);
    CHECK_FALSE(verify_shelling(s1, one));
    CHECK(one.gamma_order().size() == 3);

    auto s0 = skeleton(tri, 0);
    auto zero = skeleton_shelling(tri, *cert, 0);
    CHECK_FALSE(verify_shelling(s0, zero));

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto c = ccs::test::seeded(seed);
        auto found = search_shelling(c);
        if (!found)
            continue;
        auto mono = monotonize(c, *found);
        for (unsigned i = 0; i <= c.order(); ++i)
            CHECK_FALSE(verify_shelling(skeleton(c, i), skeleton_shelling(c, mono, i)));
    }
}

TEST_CASE("budget")
{
    auto c = from_simplicial({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}});
    SearchOptions tight;
    tight.budget = 1;
    try {
        search_shelling(c, tight);
        FAIL("expected the budget to run out");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SearchBudgetExceeded);
    }
}
