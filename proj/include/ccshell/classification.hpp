#pragma once

#include "ccshell/complex.hpp"
#include "ccshell/linalg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ccs {

/// lead * d(target) = sum of coeff * d(cell) over terms.
struct Relation {
    Cell target;
    Scalar lead;
    std::vector<std::pair<Cell, Scalar>> terms;
};

/// Checks the relation exactly and that lead is nonzero (a unit if asked).
bool check_relation(const ChainComplex& c, const Relation& r, bool unit_lead = false);

/// Searches a relation expressing d(target) through the boundaries of
/// `earlier`. With unit_lead the leading coefficient must be a unit.
std::optional<Relation> find_relation(const ChainComplex& c, Cell target, const std::vector<Cell>& earlier,
                                      bool unit_lead);

enum class ElementTag { Critical, Precritical, Noncritical };

const char* to_string(ElementTag tag);

struct ElementClass {
    Cell element;
    ElementTag tag = ElementTag::Noncritical;
    /// Set for the first element of an ordering, which is never classified
    /// by the definition and is reported Noncritical.
    bool by_convention = false;
    std::optional<Relation> witness;
};

struct DegreeOrdering {
    unsigned degree = 0;
    std::vector<Cell> permutation;
};

/// Natural basis order of one degree with non-maximal elements first.
DegreeOrdering conventional_ordering(const ChainComplex& c, unsigned degree);

/// Classifies the element at the zero-based position (position 0 throws
/// FirstPosition).
ElementClass classify_element(const ChainComplex& c, const DegreeOrdering& ordering, std::size_t position);

struct TopClassification {
    std::vector<ElementClass> classes;
    std::size_t noncritical = 0;  // m
    std::size_t precritical = 0;  // n, critical included
};

/// Classes of all top-degree elements of a pure complex of order >= 1.
TopClassification classify_top_degree(const ChainComplex& c, const DegreeOrdering& ordering);

/// Classes of the maximal elements of one degree, positions counted in the
/// given ordering. Non-maximal elements are skipped.
std::vector<ElementClass> classify_degree(const ChainComplex& c, const DegreeOrdering& ordering);

/// Cycles rho_i = g_i - (combination of noncritical elements), one per
/// critical g_i, with rho_i(g_j) = delta_ij.
std::vector<Chain> critical_cycle_basis(const ChainComplex& c, const DegreeOrdering& ordering);

}  // namespace ccs
