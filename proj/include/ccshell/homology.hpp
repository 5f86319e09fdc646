#pragma once

#include "ccshell/complex.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace ccs {

/// Isomorphism type R^free_rank + sum of R/(t_i), t_1 | t_2 | ...
struct FGModule {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const FGModule&) const = default;
};

/// "0", "Z", "Z^2 + Z/2" (ring symbol taken from the ring name).
std::string to_string(const FGModule& m, const Ring& ring);
/// Inverse of to_string for the integers; throws InvalidInput.
FGModule parse_module(const std::string& text);

/// H_0 ... H_d.
std::vector<FGModule> homology(const ChainComplex& c);

/// Homology of the sequence of maps: maps[i] goes from module i+1 to module
/// i, and module i has rank dims[i]. Returns one module per position.
std::vector<FGModule> sequence_homology(const Ring& ring, const std::vector<std::size_t>& dims,
                                        const std::vector<SparseMatrix>& maps);

struct Augmentation {
    Vector values;  // one value per degree-0 basis element
};

constexpr std::size_t kInfiniteSupport = std::numeric_limits<std::size_t>::max();

/// min |bd(x)| over x in C_1 outside ker d_1, saturated at 2.
std::size_t min_boundary_support(const ChainComplex& c);

std::optional<Augmentation> build_augmentation(const ChainComplex& c);

/// Throws InvalidAugmentation unless eps o d_1 = 0 and every value is nonzero.
void check_augmentation(const ChainComplex& c, const Augmentation& eps);

/// Homology of ... -> C_1 -> C_0 -> R -> 0 at degrees 0 ... d.
std::vector<FGModule> reduced_homology(const ChainComplex& c, const Augmentation& eps);

bool is_acyclic(const std::vector<FGModule>& h);
bool is_acyclic(const ChainComplex& c);

}  // namespace ccs
