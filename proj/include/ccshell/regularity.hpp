#pragma once

#include "ccshell/classification.hpp"
#include "ccshell/shelling.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccs {

/// Regular order of Gamma with everything needed to re-check it.
///
/// degree_orderings[v] orders the basis of degree v: the top degree follows
/// Gamma, lower degrees are the segment orderings built from the boundary
/// orders one degree up. boundary_nodes maps every element of degree >= 1
/// to a node of `shelling` ordering bd(e) with the elements shared with
/// earlier boundaries (in the degree ordering) first. Relations for the
/// second condition are keyed by (e, position in the boundary order).
struct RegularCertificate {
    ShellingCertificate shelling;
    std::vector<std::vector<Cell>> degree_orderings;
    std::map<Cell, std::size_t> boundary_nodes;
    std::map<Cell, Relation> condition1;
    std::map<std::pair<Cell, std::size_t>, Relation> condition2;
};

struct RegularViolation {
    enum class Condition { Shelling, Monotone, DegreeOrdering, BoundaryOrdering, Condition1, Condition2 };
    Condition condition;
    std::optional<Cell> element;
    std::size_t position = 0;
    std::string detail;
};

const char* to_string(RegularViolation::Condition condition);

/// Empty when the certificate is valid.
std::optional<RegularViolation> verify_regular(const ChainComplex& c, const RegularCertificate& cert);

struct RegularResult {
    std::optional<RegularCertificate> certificate;
    std::optional<RegularViolation> violation;
};

/// Tries to complete a regular certificate for a fixed ordering of Gamma.
/// The violation explains why the ordering cannot be regular.
RegularResult certify_regular_order(const ChainComplex& c, const std::vector<Cell>& gamma,
                                    const SearchOptions& options = {});

/// A regular certificate, or empty when Gamma has no regular order.
/// Throws SearchBudgetExceeded.
std::optional<RegularCertificate> search_regular(const ChainComplex& c, const SearchOptions& options = {});

/// Whether every C_e is acyclic. Throws InvalidCertificate when `cert` is
/// not a valid regular certificate.
bool is_totally_regular(const ChainComplex& c, const RegularCertificate& cert);

/// Whether every C_e is acyclic (no regularity check).
bool all_generated_acyclic(const ChainComplex& c);

/// n_v: number of critical or precritical maximal elements of degree v in
/// the degree orderings of the certificate.
std::vector<std::size_t> precritical_counts(const ChainComplex& c, const RegularCertificate& cert);

}  // namespace ccs
