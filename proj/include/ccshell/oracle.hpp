#pragma once

#include "ccshell/homology.hpp"
#include "ccshell/shelling.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ccs {

/// One certificate per valid ordering of Gamma, found by trying every
/// ordering and every sub-ordering. Throws TooLarge when |Gamma| > 5 or the
/// basis has more than 12 elements.
std::vector<ShellingCertificate> brute_shellings(const ChainComplex& c);

/// Homology through plain dense elimination. Throws TooLarge above 64 basis
/// elements.
std::vector<FGModule> dense_homology_oracle(const ChainComplex& c);

struct GeneratorConfig {
    enum class Source { RandomBoundary, RandomSimplicial, ShiftedComplex };

    std::uint64_t seed = 0;
    unsigned max_order = 2;
    std::size_t max_cells = 6;  // per degree
    int coeff_range = 3;        // coefficients of basis changes lie in [-r, r]
    bool ensure_pure = false;
    unsigned vertices = 0;      // simplicial sources; 0 picks 3 to 6
    Source source = Source::RandomSimplicial;
};

/// Deterministic in the config. Simplicial sources use at most 6 vertices.
ChainComplex generate(const GeneratorConfig& config);

/// Matrix with entries drawn uniformly from [lo, hi].
SparseMatrix random_matrix(std::mt19937_64& rng, const Ring& ring, std::size_t rows, std::size_t cols, int lo,
                           int hi);

}  // namespace ccs
