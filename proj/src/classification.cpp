#include "ccshell/classification.hpp"

#include "ccshell/error.hpp"

#include <algorithm>
#include <set>

namespace ccs {

namespace {

SparseMatrix boundary_columns(const ChainComplex& c, unsigned degree, const std::vector<Cell>& cells)
{
    std::vector<std::size_t> cols;
    for (Cell e : cells)
        cols.push_back(e.index);
    if (degree == 0)
        return SparseMatrix(c.ring(), 0, cells.size());
    return c.boundary(degree).select_columns(cols);
}

Vector boundary_vector(const ChainComplex& c, Cell e)
{
    if (e.degree == 0)
        return Vector();
    return c.boundary(e.degree).dense_column(e.index);
}

Relation make_relation(Cell target, const Scalar& lead, const std::vector<Cell>& earlier, const Vector& x)
{
    Relation r{target, lead, {}};
    for (std::size_t i = 0; i < earlier.size(); ++i)
        if (x[i] != 0)
            r.terms.emplace_back(earlier[i], x[i]);
    return r;
}

void check_ordering(const ChainComplex& c, const DegreeOrdering& o)
{
    if (o.degree > c.order())
        throw Error(ErrorKind::IndexOutOfRange, "ordering degree exceeds the order");
    std::vector<Cell> sorted = o.permutation;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.cells(o.degree))
        throw Error(ErrorKind::InvalidInput, "ordering is not a permutation of the basis of degree " +
                                                 std::to_string(o.degree));
}

void check_convention(const ChainComplex& c, const DegreeOrdering& o)
{
    bool seen_maximal = false;
    for (Cell e : o.permutation) {
        if (c.is_maximal(e))
            seen_maximal = true;
        else if (seen_maximal)
            throw Error(ErrorKind::OrderingConventionViolated,
                        "non-maximal element " + c.name(e) + " follows a maximal element");
    }
}

ElementClass classify_checked(const ChainComplex& c, const DegreeOrdering& o, std::size_t position)
{
    Cell e = o.permutation[position];
    ElementClass out{e, ElementTag::Noncritical, false, std::nullopt};
    if (position == 0) {
        out.by_convention = true;
        return out;
    }
    std::vector<Cell> earlier(o.permutation.begin(), o.permutation.begin() + static_cast<std::ptrdiff_t>(position));
    SpanSolver solver(boundary_columns(c, o.degree, earlier));
    Vector v = e.degree == 0 ? Vector() : boundary_vector(c, e);
    if (auto x = solver.solve(v)) {
        out.tag = ElementTag::Critical;
        out.witness = make_relation(e, 1, earlier, *x);
    } else if (auto w = solver.solve_rational(v)) {
        out.tag = ElementTag::Precritical;
        out.witness = make_relation(e, w->lead, earlier, w->x);
    }
    return out;
}

}  // namespace

bool check_relation(const ChainComplex& c, const Relation& r, bool unit_lead)
{
    const Ring& ring = c.ring();
    if (ring.reduce(r.lead) == 0)
        return false;
    if (unit_lead && !ring.is_unit(r.lead))
        return false;
    const unsigned v = r.target.degree;
    if (v > c.order() || r.target.index >= c.rank(v))
        return false;
    if (v == 0)
        return true;
    Vector lhs = boundary_vector(c, r.target);
    for (auto& x : lhs)
        x = ring.mul(x, r.lead);
    Vector rhs(lhs.size());
    for (const auto& [cell, coeff] : r.terms) {
        if (cell.degree != v || cell.index >= c.rank(v))
            return false;
        Vector col = boundary_vector(c, cell);
        for (std::size_t i = 0; i < rhs.size(); ++i)
            rhs[i] = ring.add(rhs[i], ring.mul(coeff, col[i]));
    }
    return lhs == rhs;
}

std::optional<Relation> find_relation(const ChainComplex& c, Cell target, const std::vector<Cell>& earlier,
                                      bool unit_lead)
{
    if (target.degree == 0)
        return Relation{target, 1, {}};
    SpanSolver solver(boundary_columns(c, target.degree, earlier));
    Vector v = boundary_vector(c, target);
    if (auto x = solver.solve(v))
        return make_relation(target, 1, earlier, *x);
    if (unit_lead)
        return std::nullopt;
    if (auto w = solver.solve_rational(v))
        return make_relation(target, w->lead, earlier, w->x);
    return std::nullopt;
}

const char* to_string(ElementTag tag)
{
    switch (tag) {
    case ElementTag::Critical: return "critical";
    case ElementTag::Precritical: return "precritical";
    case ElementTag::Noncritical: return "noncritical";
    }
    return "?";
}

DegreeOrdering conventional_ordering(const ChainComplex& c, unsigned degree)
{
    DegreeOrdering o{degree, {}};
    for (Cell e : c.cells(degree))
        if (!c.is_maximal(e))
            o.permutation.push_back(e);
    for (Cell e : c.cells(degree))
        if (c.is_maximal(e))
            o.permutation.push_back(e);
    return o;
}

ElementClass classify_element(const ChainComplex& c, const DegreeOrdering& ordering, std::size_t position)
{
    check_ordering(c, ordering);
    if (position >= ordering.permutation.size())
        throw Error(ErrorKind::IndexOutOfRange, "position outside the ordering");
    Cell e = ordering.permutation[position];
    if (!c.is_maximal(e))
        throw Error(ErrorKind::NotMaximal, c.name(e) + " is not a maximal element");
    if (position == 0)
        throw Error(ErrorKind::FirstPosition, "the first position is not classified");
    check_convention(c, ordering);
    return classify_checked(c, ordering, position);
}

std::vector<ElementClass> classify_degree(const ChainComplex& c, const DegreeOrdering& ordering)
{
    check_ordering(c, ordering);
    check_convention(c, ordering);
    std::vector<ElementClass> out;
    for (std::size_t p = 0; p < ordering.permutation.size(); ++p)
        if (c.is_maximal(ordering.permutation[p]))
            out.push_back(classify_checked(c, ordering, p));
    return out;
}

TopClassification classify_top_degree(const ChainComplex& c, const DegreeOrdering& ordering)
{
    if (c.order() == 0)
        throw Error(ErrorKind::InvalidInput, "classification of the top degree needs order at least 1");
    if (!is_pure(c))
        throw Error(ErrorKind::NotPure, "the complex is not pure");
    if (ordering.degree != c.order())
        throw Error(ErrorKind::InvalidInput, "ordering is not on the top degree");
    TopClassification out;
    out.classes = classify_degree(c, ordering);
    for (const auto& k : out.classes)
        if (k.tag == ElementTag::Noncritical)
            ++out.noncritical;
        else
            ++out.precritical;
    return out;
}

std::vector<Chain> critical_cycle_basis(const ChainComplex& c, const DegreeOrdering& ordering)
{
    TopClassification top = classify_top_degree(c, ordering);
    std::vector<Cell> noncritical;
    std::vector<Cell> critical;
    for (const auto& k : top.classes) {
        if (k.tag == ElementTag::Precritical)
            throw Error(ErrorKind::StrictlyPrecriticalPresent,
                        c.name(k.element) + " is precritical but not critical");
        (k.tag == ElementTag::Noncritical ? noncritical : critical).push_back(k.element);
    }
    const unsigned d = c.order();
    SpanSolver solver(boundary_columns(c, d, noncritical));
    std::vector<Chain> out;
    for (Cell g : critical) {
        auto x = solver.solve(boundary_vector(c, g));
        if (!x)
            throw Error(ErrorKind::InvalidInput, "critical element " + c.name(g) +
                                                     " is not reduced by the noncritical elements");
        std::map<std::uint32_t, Scalar> coeffs;
        coeffs[g.index] = 1;
        for (std::size_t i = 0; i < noncritical.size(); ++i)
            if ((*x)[i] != 0)
                coeffs[noncritical[i].index] = -(*x)[i];
        out.push_back(make_chain(c, d, coeffs));
    }
    return out;
}

}  // namespace ccs
