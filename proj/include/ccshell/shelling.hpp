#pragma once

#include "ccshell/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccs {

/// One ordering inside a shelling certificate.
///
/// The root node (cell empty) orders Gamma. A node with cell g orders bd(g),
/// i.e. it shells the complex generated by bd(g), and its first
/// prefix.size() entries are exactly the prefix set. children[j] is the node
/// shelling bd(order[j]); it is empty when order[j] has degree 0. Child j is
/// keyed by (order[j], P_j) where P_j is the top-degree part of the
/// intersection of the closure of order[j] with the closures of the earlier
/// entries (P_0 is empty).
///
/// Sub-shellings are chosen independently per position: two positions may
/// point at different nodes for the same cell.
struct ShellingNode {
    std::optional<Cell> cell;
    std::vector<Cell> prefix;  // sorted
    std::vector<Cell> order;
    std::vector<std::optional<std::size_t>> children;
};

struct ShellingCertificate {
    std::vector<ShellingNode> nodes;
    std::size_t root = 0;

    const std::vector<Cell>& gamma_order() const { return nodes.at(root).order; }
};

enum class ShellingViolationKind { NotPure, WrongOrder, NoPrefixSubShelling, EmptyIntersection };

const char* to_string(ShellingViolationKind kind);

struct ShellingViolation {
    ShellingViolationKind kind;
    std::size_t node = 0;      // node whose ordering fails
    std::size_t position = 0;  // zero-based position inside that ordering
    unsigned degree = 0;       // degree of the element at that position
    std::vector<Cell> cells;   // offending set (intersection or prefix)
    std::string detail;
};

/// CCSHELL_BUDGET if set to a positive integer, otherwise 10^6.
std::uint64_t default_budget();

struct SearchOptions {
    std::uint64_t budget = default_budget();
    unsigned threads = 1;
};

/// Empty when the certificate is a valid shelling of Gamma. Structural
/// defects (orders that are not permutations, bad node references) throw
/// MalformedCertificate.
std::optional<ShellingViolation> verify_shelling(const ChainComplex& c, const ShellingCertificate& cert);

/// Checks one node and everything below it.
std::optional<ShellingViolation> verify_shelling_node(const ChainComplex& c, const ShellingCertificate& cert,
                                                      std::size_t node);

/// A valid certificate, or empty when none exists. Throws
/// SearchBudgetExceeded when the node budget runs out.
std::optional<ShellingCertificate> search_shelling(const ChainComplex& c, const SearchOptions& options = {});

/// Certificate for a fixed ordering of Gamma, with sub-shellings searched.
/// Returns the violation when the ordering itself fails or some required
/// sub-shelling does not exist.
struct OrderCertification {
    std::optional<ShellingCertificate> certificate;
    std::optional<ShellingViolation> violation;
};
OrderCertification certify_shelling_order(const ChainComplex& c, const std::vector<Cell>& gamma,
                                          const SearchOptions& options = {});

/// Pairs (i, j), zero-based, with i < j and deg(g_i) < deg(g_j).
std::vector<std::pair<std::size_t, std::size_t>> failures(const ShellingCertificate& cert);

/// Every intermediate certificate of the adjacent-swap repair, starting with
/// the input and ending with a certificate without failures.
/// Throws InvalidInput when the input is not a valid shelling.
std::vector<ShellingCertificate> monotonize_steps(const ChainComplex& c, const ShellingCertificate& cert,
                                                  const SearchOptions& options = {});
ShellingCertificate monotonize(const ChainComplex& c, const ShellingCertificate& cert,
                               const SearchOptions& options = {});

/// Ordering of the basis of degree v - 1 built from the orders of the
/// boundary sets of the degree-v elements, followed by the maximal elements
/// of degree v - 1 in Gamma order.
std::vector<Cell> segment_ordering(const ChainComplex& c, const std::vector<Cell>& upper,
                                   const std::vector<std::vector<Cell>>& boundary_orders,
                                   const std::vector<Cell>& gamma_lower);

/// Certificate for skeleton(c, i) built from a valid monotone certificate.
/// Throws InvalidInput when the input is not valid and monotone.
ShellingCertificate skeleton_shelling(const ChainComplex& c, const ShellingCertificate& cert, unsigned i,
                                      const SearchOptions& options = {});

/// Drops nodes unreachable from the root and from `keep`, renumbering.
/// `keep` is updated in place.
ShellingCertificate compact(const ShellingCertificate& cert, std::vector<std::size_t>* keep = nullptr);

}  // namespace ccs
