#include "support.hpp"

#include <doctest.h>

using namespace ccs;
using ccs::test::cell;

TEST_CASE("fixed orders")
{
    auto c = load_fixture("ex_6_1_2");
    auto r = certify_regular_order(c, {cell(2, 2), cell(2, 1)});
    REQUIRE(r.certificate);
    CHECK_FALSE(verify_regular(c, *r.certificate));

    // bd(e2_2) lies inside bd(e2_1).
    r = certify_regular_order(c, {cell(2, 1), cell(2, 2)});
    CHECK_FALSE(r.certificate);
    REQUIRE(r.violation);
    CHECK(r.violation->condition == RegularViolation::Condition::Condition1);
    CHECK(r.violation->element == cell(2, 2));

    auto e1 = load_fixture("ex_6_1_1");
    for (const auto& gamma : {std::vector{cell(1, 1), cell(1, 2)}, std::vector{cell(1, 2), cell(1, 1)}}) {
        r = certify_regular_order(e1, gamma);
        CHECK_FALSE(r.certificate);
        CHECK(r.violation);
    }

    auto e5 = load_fixture("ex_6_1_5");
    r = certify_regular_order(e5, {cell(1, 1), cell(1, 2)});
    REQUIRE(r.certificate);
    CHECK_FALSE(verify_regular(e5, *r.certificate));
    r = certify_regular_order(e5, {cell(1, 2), cell(1, 1)});
    CHECK_FALSE(r.certificate);
    CHECK(r.violation);
}

TEST_CASE("search")
{
    auto c = load_fixture("ex_6_1_4");
    auto cert = search_regular(c);
    REQUIRE(cert);
    CHECK_FALSE(verify_regular(c, *cert));
    CHECK_FALSE(verify_shelling(c, cert->shelling));

    CHECK_FALSE(search_regular(load_fixture("ex_6_1_3")));
    CHECK_FALSE(search_regular(load_fixture("ex_6_1_1")));
}

TEST_CASE("tampered certificates are rejected")
{
    auto c = load_fixture("ex_6_1_2");
    auto r = certify_regular_order(c, {cell(2, 2), cell(2, 1)});
    REQUIRE(r.certificate);
    REQUIRE_FALSE(r.certificate->condition2.empty());
    auto cut = *r.certificate;
    cut.condition2.erase(cut.condition2.begin());
    CHECK(verify_regular(c, cut));

    // Degree-0 relations hold for any lead; skew one with a real boundary.
    auto skew = *r.certificate;
    auto it = std::find_if(skew.condition2.begin(), skew.condition2.end(),
                           [](const auto& kv) { return kv.second.target.degree >= 1 && !kv.second.terms.empty(); });
    REQUIRE(it != skew.condition2.end());
    it->second.lead = it->second.lead + 1;
    CHECK(verify_regular(c, skew));

    auto k = load_fixture("ex_5_1_2");
    auto ck = search_regular(k);
    REQUIRE(ck);
    REQUIRE(ck->condition1.size() == 1);
    auto drop = *ck;
    drop.condition1.clear();
    CHECK(verify_regular(k, drop));

    auto swapped = *r.certificate;
    std::swap(swapped.degree_orderings[1][0], swapped.degree_orderings[1][1]);
    CHECK(verify_regular(c, swapped));
}

TEST_CASE("total regularity")
{
    auto c = load_fixture("ex_6_1_6");
    auto cert = search_regular(c);
    REQUIRE(cert);
    CHECK(is_totally_regular(c, *cert));

    auto e2 = load_fixture("ex_6_1_2");
    auto r = certify_regular_order(e2, {cell(2, 2), cell(2, 1)});
    REQUIRE(r.certificate);
    CHECK_FALSE(is_totally_regular(e2, *r.certificate));
    CHECK_FALSE(is_acyclic(subcomplex(e2, generated_subcomplex(e2, cell(2, 1)))));

    int regular = 0;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto s = ccs::test::random_facet_family(seed);
        auto found = search_regular(s);
        if (!found)
            continue;
        ++regular;
        CHECK(is_totally_regular(s, *found));
    }
    CHECK(regular > 10);
}

TEST_CASE("generated subcomplexes of simplicial complexes are acyclic")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto s = ccs::test::random_facet_family(seed);
        bool all = true;
        for (unsigned v = 0; v <= s.order(); ++v)
            for (const Cell& e : s.cells(v))
                all = all && is_acyclic(subcomplex(s, generated_subcomplex(s, e)));
        CHECK(all);
        CHECK(all_generated_acyclic(s));
    }
}

TEST_CASE("precritical counts match the classification")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto c = ccs::test::seeded(seed, true);
        auto cert = search_regular(c);
        if (!cert)
            continue;
        auto n = precritical_counts(c, *cert);
        REQUIRE(n.size() == c.order() + 1);
        for (unsigned v = 0; v <= c.order(); ++v) {
            std::size_t count = 0;
            for (const auto& k : classify_degree(c, DegreeOrdering{v, cert->degree_orderings[v]}))
                if (!k.by_convention && k.tag != ElementTag::Noncritical)
                    ++count;
            CHECK(n[v] == count);
        }
    }
}
