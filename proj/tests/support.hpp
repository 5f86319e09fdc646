#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include "ccshell/classification.hpp"
#include "ccshell/complex.hpp"
#include "ccshell/document.hpp"
#include "ccshell/error.hpp"
#include "ccshell/fixtures.hpp"
#include "ccshell/homology.hpp"
#include "ccshell/linalg.hpp"
#include "ccshell/oracle.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

namespace ccs::test {

inline Cell cell(unsigned degree, unsigned one_based) { return Cell{degree, one_based - 1}; }

/// Complex from a small table: bases[v] = k_v, columns[(v, j)] = {(i, x)},
/// all indices one-based.
struct Table {
    std::vector<std::size_t> ranks;
    struct Col {
        unsigned degree;
        std::size_t from;
        std::vector<std::pair<std::size_t, long>> entries;
    };
    std::vector<Col> cols;
};

inline ChainComplex build(const Table& t, const Ring& ring = Ring::integers())
{
    std::vector<std::vector<std::string>> labels;
    for (std::size_t v = 0; v < t.ranks.size(); ++v) {
        labels.emplace_back();
        for (std::size_t j = 1; j <= t.ranks[v]; ++j)
            labels.back().push_back("e" + std::to_string(v) + "_" + std::to_string(j));
    }
    std::vector<BoundaryEntry> entries;
    for (const auto& col : t.cols)
        for (const auto& [i, x] : col.entries)
            entries.push_back({col.degree, col.from - 1, i - 1, Scalar(x)});
    return build_complex(ring, labels, entries);
}

/// Cone over a random simplicial complex: every facet gets the apex 0.
inline ChainComplex random_simplicial_cone(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> vertices(2, 4), count(1, 3), size(1, 2);
    const int n = vertices(rng);
    std::vector<std::vector<long>> facets;
    const int k = count(rng);
    for (int f = 0; f < k; ++f) {
        std::vector<long> all;
        for (int v = 1; v <= n; ++v)
            all.push_back(v);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(std::min(size(rng), n)));
        all.push_back(0);
        facets.push_back(all);
    }
    return from_simplicial(facets);
}

/// Two or three facets of dimension 1 or 2 on at most 6 vertices; often
/// not shellable.
inline ChainComplex random_facet_family(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> vertices(4, 6), count(2, 3), size(2, 3);
    const int n = vertices(rng);
    std::vector<std::vector<long>> facets;
    const int k = count(rng);
    for (int f = 0; f < k; ++f) {
        std::vector<long> all;
        for (int v = 1; v <= n; ++v)
            all.push_back(v);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(size(rng)));
        facets.push_back(all);
    }
    return from_simplicial(facets);
}

/// Generated complex cycling through the three sources.
inline ChainComplex seeded(std::uint64_t seed, bool pure = false, std::size_t max_cells = 5)
{
    using Source = GeneratorConfig::Source;
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.ensure_pure = pure;
    cfg.max_cells = max_cells;
    cfg.source = std::array{Source::RandomBoundary, Source::RandomSimplicial, Source::ShiftedComplex}[seed % 3];
    return generate(cfg);
}

/// Dense vector of a chain.
inline Vector dense(const ChainComplex& c, const Chain& x) { return chain_to_vector(c, x); }

inline bool is_cycle(const ChainComplex& c, const Chain& x) { return apply_boundary(c, x).coeffs.empty(); }

/// Appends a degree-1 element whose boundary is the single vertex e^0_1.
inline ChainComplex with_single_support_edge(const ChainComplex& c)
{
    std::vector<std::vector<std::string>> labels = c.labels();
    if (labels.size() < 2)
        labels.emplace_back();
    labels[1].push_back("spike");
    std::vector<BoundaryEntry> entries;
    for (unsigned v = 1; v <= c.order(); ++v)
        for (std::size_t j = 0; j < c.rank(v); ++j)
            for (const auto& [i, x] : c.boundary(v).column(j))
                entries.push_back({v, j, i, x});
    // Columns of degree 2 keep their indices: the new edge is appended last.
    entries.push_back({1, labels[1].size() - 1, 0, Scalar(1)});
    return build_complex(c.ring(), labels, entries);
}

}  // namespace ccs::test
