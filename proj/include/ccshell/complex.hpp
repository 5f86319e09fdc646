#pragma once

#include "ccshell/matrix.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ccs {

/// A basis element e^degree_{index+1}. Indices are zero-based.
struct Cell {
    std::uint32_t degree = 0;
    std::uint32_t index = 0;

    auto operator<=>(const Cell&) const = default;
};

/// Subset of the basis, indexed by ChainComplex::flat().
using CellSet = boost::dynamic_bitset<>;

/// Finite chain complex with fixed ordered bases. Immutable once built.
class ChainComplex {
public:
    /// labels[v] lists the basis of degree v (an empty label means unnamed);
    /// boundaries[v - 1] is the matrix of the boundary map on degree v.
    /// Throws EmptyTopDegree, DanglingReference or BoundaryConditionViolated.
    ChainComplex(Ring ring, std::vector<std::vector<std::string>> labels, std::vector<SparseMatrix> boundaries);

    const Ring& ring() const { return ring_; }
    unsigned order() const { return static_cast<unsigned>(labels_.size() - 1); }
    /// k_v; zero above the order.
    std::size_t rank(unsigned degree) const { return degree < labels_.size() ? labels_[degree].size() : 0; }
    std::size_t size() const { return offsets_.back(); }

    const std::string& label(Cell c) const { return labels_.at(c.degree).at(c.index); }
    /// Label if present, otherwise "e^v_j" with a one-based j.
    std::string name(Cell c) const;
    std::optional<Cell> find(unsigned degree, const std::string& label) const;
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }

    /// Matrix of the boundary map on the given degree (k_{v-1} x k_v).
    /// Degree 0 yields a 0 x k_0 zero matrix.
    const SparseMatrix& boundary(unsigned degree) const;

    /// bd(e): support of the boundary of a basis element, in basis order.
    const std::vector<Cell>& bd(Cell c) const { return bd_[flat(c)]; }
    /// Elements f with c in bd(f).
    const std::vector<Cell>& cofaces(Cell c) const { return cofaces_[flat(c)]; }
    bool is_maximal(Cell c) const { return cofaces(c).empty(); }

    std::size_t flat(Cell c) const { return offsets_[c.degree] + c.index; }
    Cell cell(std::size_t flat) const;
    std::vector<Cell> cells(unsigned degree) const;
    CellSet empty_set() const { return CellSet(size()); }

private:
    Ring ring_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<SparseMatrix> boundaries_;
    SparseMatrix zero_boundary_;
    std::vector<std::size_t> offsets_;
    std::vector<std::vector<Cell>> bd_;
    std::vector<std::vector<Cell>> cofaces_;
};

/// Entry for build_complex: column `col` of the boundary on `degree` has
/// `value` in row `row` (all zero-based).
struct BoundaryEntry {
    unsigned degree;
    std::size_t col;
    std::size_t row;
    Scalar value;
};

ChainComplex build_complex(const Ring& ring, const std::vector<std::vector<std::string>>& bases,
                           const std::vector<BoundaryEntry>& entries);

/// A chain of one degree with nonzero coefficients keyed by basis index.
struct Chain {
    unsigned degree = 0;
    std::map<std::uint32_t, Scalar> coeffs;

    Scalar operator()(std::uint32_t index) const;
    bool operator==(const Chain&) const = default;
};

/// Builds a chain, reducing coefficients into the ring and dropping zeros.
Chain make_chain(const ChainComplex& c, unsigned degree, const std::map<std::uint32_t, Scalar>& coeffs);
Chain chain_from_vector(const ChainComplex& c, unsigned degree, const Vector& v);
Vector chain_to_vector(const ChainComplex& c, const Chain& x);

std::vector<Cell> support(const ChainComplex& c, const Chain& x);
Chain apply_boundary(const ChainComplex& c, const Chain& x);
std::vector<Cell> boundary_support(const ChainComplex& c, const Chain& x);

/// Downward closure of one element (the basis of C_e).
CellSet generated_subcomplex(const ChainComplex& c, Cell e);
/// Downward closure of a set of elements.
CellSet closure(const ChainComplex& c, const std::vector<Cell>& generators);
std::vector<Cell> cells_of(const ChainComplex& c, const CellSet& s);

ChainComplex skeleton(const ChainComplex& c, unsigned i);
/// The complex spanned by a downward-closed subset, with bases renumbered in
/// the original order. Throws InvalidInput if the subset is not closed.
ChainComplex subcomplex(const ChainComplex& c, const CellSet& elements);

bool is_pure(const ChainComplex& c);
/// Gamma: elements in no boundary set, by descending degree then basis order.
std::vector<Cell> maximal_elements(const ChainComplex& c);

/// Simplicial chain complex over Z of the complex generated by the facets.
ChainComplex from_simplicial(const std::vector<std::vector<long>>& facets);

}  // namespace ccs
