#include "support.hpp"

#include <doctest.h>

using namespace ccs;
using ccs::test::build;

namespace {

using Source = GeneratorConfig::Source;

}  // namespace

TEST_CASE("exhaustive shellings")
{
    CHECK_FALSE(brute_shellings(load_fixture("ex_5_1_1_k2")).empty());
    CHECK(brute_shellings(from_simplicial({{1, 2}, {3, 4}})).empty());
    CHECK(brute_shellings(build({{3}, {}})).size() == 6);
    CHECK_THROWS_AS(brute_shellings(from_simplicial({{1, 2, 3, 4}})), Error);
}

TEST_CASE("dense homology")
{
    for (const auto& f : embedded_fixture_files()) {
        auto c = load_fixture(f.name);
        CHECK_MESSAGE(dense_homology_oracle(c) == homology(c), f.name);
    }
    CHECK(dense_homology_oracle(build({{3}, {}})) == std::vector<FGModule>{{3, {}}});
    CHECK(dense_homology_oracle(load_fixture("ex_5_1_3_k2"))[0] == FGModule{0, {mpz_class(2)}});
}

TEST_CASE("generator is deterministic")
{
    for (Source s : {Source::RandomSimplicial, Source::RandomBoundary, Source::ShiftedComplex}) {
        GeneratorConfig cfg;
        cfg.seed = 0;
        cfg.source = s;
        auto a = generate(cfg), b = generate(cfg);
        CHECK(a.labels() == b.labels());
        for (unsigned v = 1; v <= a.order(); ++v)
            CHECK(a.boundary(v) == b.boundary(v));
        for (unsigned v = 2; v <= a.order(); ++v)
            CHECK(multiply(a.boundary(v - 1), a.boundary(v)).is_zero());
    }
}

TEST_CASE("generator constraints")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (Source s : {Source::RandomSimplicial, Source::RandomBoundary, Source::ShiftedComplex}) {
            GeneratorConfig cfg;
            cfg.seed = seed;
            cfg.source = s;
            cfg.ensure_pure = true;
            auto c = generate(cfg);
            CHECK(is_pure(c));
            CHECK(c.order() <= cfg.max_order);
        }
    }
}

TEST_CASE("shifted complexes are shellable")
{
    GeneratorConfig cfg;
    cfg.source = Source::ShiftedComplex;
    cfg.vertices = 4;
    cfg.max_order = 2;
    cfg.ensure_pure = true;
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        cfg.seed = seed;
        auto c = generate(cfg);
        std::vector<ShellingCertificate> all;
        try {
            all = brute_shellings(c);
        } catch (const Error&) {
            continue;
        }
        ++checked;
        CHECK_FALSE(all.empty());
        CHECK(search_shelling(c));
    }
    CHECK(checked >= 10);
}

TEST_CASE("random matrices stay in range")
{
    std::mt19937_64 rng(3);
    auto m = random_matrix(rng, Ring::integers(), 3, 4, -2, 2);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (const auto& [i, x] : m.column(j))
            CHECK((x >= -2 && x <= 2));
}
