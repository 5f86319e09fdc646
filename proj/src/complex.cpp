#include "ccshell/complex.hpp"

#include "ccshell/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace ccs {

ChainComplex::ChainComplex(Ring ring, std::vector<std::vector<std::string>> labels,
                           std::vector<SparseMatrix> boundaries)
    : ring_(std::move(ring)), labels_(std::move(labels))
{
    if (labels_.empty() || labels_.back().empty())
        throw Error(ErrorKind::EmptyTopDegree, "the top degree of a complex must have a nonempty basis");
    const unsigned d = order();
    if (boundaries.size() != d)
        throw Error(ErrorKind::DanglingReference,
                    "expected " + std::to_string(d) + " boundary matrices, got " + std::to_string(boundaries.size()));

    for (unsigned v = 0; v <= d; ++v) {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_[v])
            if (!l.empty() && !seen.insert(l).second)
                throw Error(ErrorKind::InvalidInput, "duplicate label '" + l + "' in degree " + std::to_string(v));
    }

    for (unsigned v = 1; v <= d; ++v) {
        const SparseMatrix& in = boundaries[v - 1];
        if (in.rows() != rank(v - 1) || in.cols() != rank(v))
            throw Error(ErrorKind::DanglingReference,
                        "boundary matrix of degree " + std::to_string(v) + " has the wrong shape");
        SparseMatrix m(ring_, in.rows(), in.cols());
        for (std::size_t j = 0; j < in.cols(); ++j)
            for (const auto& [i, x] : in.column(j))
                m.set(i, j, x);
        boundaries_.push_back(std::move(m));
    }
    zero_boundary_ = SparseMatrix(ring_, 0, rank(0));

    for (unsigned v = 1; v < d; ++v) {
        SparseMatrix product = multiply(boundaries_[v - 1], boundaries_[v]);
        for (std::size_t j = 0; j < product.cols(); ++j)
            if (!product.column(j).empty()) {
                Error e(ErrorKind::BoundaryConditionViolated,
                        "boundary of degree " + std::to_string(v) + " composed with degree " + std::to_string(v + 1) +
                            " is nonzero on column " + std::to_string(j + 1) + " (" +
                            name(Cell{v + 1, static_cast<std::uint32_t>(j)}) + ")");
                e.degree = v;
                e.index = j;
                throw e;
            }
    }

    offsets_.assign(d + 2, 0);
    for (unsigned v = 0; v <= d; ++v)
        offsets_[v + 1] = offsets_[v] + rank(v);
    bd_.resize(size());
    cofaces_.resize(size());
    for (unsigned v = 1; v <= d; ++v)
        for (std::size_t j = 0; j < rank(v); ++j) {
            Cell f{v, static_cast<std::uint32_t>(j)};
            for (const auto& entry : boundaries_[v - 1].column(j)) {
                Cell e{v - 1, static_cast<std::uint32_t>(entry.first)};
                bd_[flat(f)].push_back(e);
                cofaces_[flat(e)].push_back(f);
            }
        }
}

std::string ChainComplex::name(Cell c) const
{
    const std::string& l = label(c);
    if (!l.empty())
        return l;
    return "e^" + std::to_string(c.degree) + "_" + std::to_string(c.index + 1);
}

std::optional<Cell> ChainComplex::find(unsigned degree, const std::string& label) const
{
    if (degree >= labels_.size())
        return std::nullopt;
    const auto& row = labels_[degree];
    auto it = std::find(row.begin(), row.end(), label);
    if (it == row.end())
        return std::nullopt;
    return Cell{degree, static_cast<std::uint32_t>(it - row.begin())};
}

const SparseMatrix& ChainComplex::boundary(unsigned degree) const
{
    if (degree == 0)
        return zero_boundary_;
    if (degree > order())
        throw Error(ErrorKind::IndexOutOfRange, "no boundary map on degree " + std::to_string(degree));
    return boundaries_[degree - 1];
}

Cell ChainComplex::cell(std::size_t flat) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
    auto degree = static_cast<std::uint32_t>(it - offsets_.begin() - 1);
    return Cell{degree, static_cast<std::uint32_t>(flat - offsets_[degree])};
}

std::vector<Cell> ChainComplex::cells(unsigned degree) const
{
    std::vector<Cell> out;
    for (std::size_t j = 0; j < rank(degree); ++j)
        out.push_back(Cell{degree, static_cast<std::uint32_t>(j)});
    return out;
}

ChainComplex build_complex(const Ring& ring, const std::vector<std::vector<std::string>>& bases,
                           const std::vector<BoundaryEntry>& entries)
{
    if (bases.empty())
        throw Error(ErrorKind::EmptyTopDegree, "no basis given");
    const auto d = static_cast<unsigned>(bases.size() - 1);
    std::vector<SparseMatrix> maps;
    for (unsigned v = 1; v <= d; ++v)
        maps.emplace_back(ring, bases[v - 1].size(), bases[v].size());
    for (const auto& e : entries) {
        if (e.degree == 0 || e.degree > d || e.col >= bases[e.degree].size() || e.row >= bases[e.degree - 1].size()) {
            Error err(ErrorKind::DanglingReference, "boundary entry references a missing basis element (degree " +
                                                        std::to_string(e.degree) + ", column " +
                                                        std::to_string(e.col + 1) + ", row " +
                                                        std::to_string(e.row + 1) + ")");
            err.degree = e.degree;
            err.index = e.col;
            throw err;
        }
        SparseMatrix& m = maps[e.degree - 1];
        m.set(e.row, e.col, m.at(e.row, e.col) + ring.reduce(e.value));
    }
    return ChainComplex(ring, bases, std::move(maps));
}

Scalar Chain::operator()(std::uint32_t index) const
{
    auto it = coeffs.find(index);
    return it == coeffs.end() ? Scalar(0) : it->second;
}

Chain make_chain(const ChainComplex& c, unsigned degree, const std::map<std::uint32_t, Scalar>& coeffs)
{
    Chain x;
    x.degree = degree;
    for (const auto& [i, a] : coeffs) {
        if (i >= c.rank(degree))
            throw Error(ErrorKind::DanglingReference, "chain coefficient outside the basis");
        Scalar r = c.ring().reduce(a);
        if (r != 0)
            x.coeffs[i] = r;
    }
    return x;
}

Chain chain_from_vector(const ChainComplex& c, unsigned degree, const Vector& v)
{
    std::map<std::uint32_t, Scalar> coeffs;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            coeffs[static_cast<std::uint32_t>(i)] = v[i];
    return make_chain(c, degree, coeffs);
}

Vector chain_to_vector(const ChainComplex& c, const Chain& x)
{
    Vector v(c.rank(x.degree));
    for (const auto& [i, a] : x.coeffs)
        v.at(i) = a;
    return v;
}

std::vector<Cell> support(const ChainComplex& c, const Chain& x)
{
    std::vector<Cell> out;
    for (const auto& [i, a] : x.coeffs)
        if (c.ring().reduce(a) != 0)
            out.push_back(Cell{x.degree, i});
    return out;
}

Chain apply_boundary(const ChainComplex& c, const Chain& x)
{
    if (x.degree == 0 || x.degree > c.order())
        return Chain{x.degree == 0 ? 0u : x.degree - 1, {}};
    Vector y = c.boundary(x.degree).apply(chain_to_vector(c, x));
    return chain_from_vector(c, x.degree - 1, y);
}

std::vector<Cell> boundary_support(const ChainComplex& c, const Chain& x) { return support(c, apply_boundary(c, x)); }

CellSet closure(const ChainComplex& c, const std::vector<Cell>& generators)
{
    CellSet s = c.empty_set();
    std::vector<Cell> stack;
    for (Cell g : generators)
        if (!s.test(c.flat(g))) {
            s.set(c.flat(g));
            stack.push_back(g);
        }
    while (!stack.empty()) {
        Cell e = stack.back();
        stack.pop_back();
        for (Cell f : c.bd(e))
            if (!s.test(c.flat(f))) {
                s.set(c.flat(f));
                stack.push_back(f);
            }
    }
    return s;
}

CellSet generated_subcomplex(const ChainComplex& c, Cell e) { return closure(c, {e}); }

std::vector<Cell> cells_of(const ChainComplex& c, const CellSet& s)
{
    std::vector<Cell> out;
    for (auto i = s.find_first(); i != CellSet::npos; i = s.find_next(i))
        out.push_back(c.cell(i));
    return out;
}

ChainComplex skeleton(const ChainComplex& c, unsigned i)
{
    if (i > c.order())
        throw Error(ErrorKind::IndexOutOfRange,
                    "skeleton degree " + std::to_string(i) + " exceeds the order " + std::to_string(c.order()));
    std::vector<std::vector<std::string>> labels(c.labels().begin(), c.labels().begin() + i + 1);
    std::vector<SparseMatrix> maps;
    for (unsigned v = 1; v <= i; ++v)
        maps.push_back(c.boundary(v));
    return ChainComplex(c.ring(), std::move(labels), std::move(maps));
}

ChainComplex subcomplex(const ChainComplex& c, const CellSet& elements)
{
    for (auto i = elements.find_first(); i != CellSet::npos; i = elements.find_next(i))
        for (Cell f : c.bd(c.cell(i)))
            if (!elements.test(c.flat(f)))
                throw Error(ErrorKind::InvalidInput, "subset is not closed under bd");
    unsigned top = 0;
    bool any = false;
    std::vector<std::vector<std::size_t>> kept(c.order() + 1);
    for (auto i = elements.find_first(); i != CellSet::npos; i = elements.find_next(i)) {
        Cell e = c.cell(i);
        kept[e.degree].push_back(e.index);
        top = std::max<unsigned>(top, e.degree);
        any = true;
    }
    if (!any)
        throw Error(ErrorKind::EmptyTopDegree, "empty subcomplex");
    std::vector<std::vector<std::string>> labels(top + 1);
    for (unsigned v = 0; v <= top; ++v)
        for (std::size_t j : kept[v])
            labels[v].push_back(c.labels()[v][j]);
    std::vector<SparseMatrix> maps;
    for (unsigned v = 1; v <= top; ++v)
        maps.push_back(c.boundary(v).select_columns(kept[v]).select_rows(kept[v - 1]));
    return ChainComplex(c.ring(), std::move(labels), std::move(maps));
}

bool is_pure(const ChainComplex& c)
{
    for (unsigned v = 0; v < c.order(); ++v)
        for (Cell e : c.cells(v))
            if (c.cofaces(e).empty())
                return false;
    return true;
}

std::vector<Cell> maximal_elements(const ChainComplex& c)
{
    std::vector<Cell> out;
    for (unsigned v = c.order() + 1; v-- > 0;)
        for (Cell e : c.cells(v))
            if (c.is_maximal(e))
                out.push_back(e);
    return out;
}

namespace {

std::string simplex_label(const std::vector<long>& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out;
}

}  // namespace

ChainComplex from_simplicial(const std::vector<std::vector<long>>& facets)
{
    if (facets.empty())
        throw Error(ErrorKind::EmptyInput, "no facets given");
    std::vector<std::set<std::vector<long>>> faces;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty())
            throw Error(ErrorKind::EmptyInput, "empty facet");
        if (f.size() > 24)
            throw Error(ErrorKind::TooLarge, "facet with more than 24 vertices");
        if (faces.size() < f.size())
            faces.resize(f.size());
        const std::size_t n = f.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<long> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    face.push_back(f[i]);
            faces[face.size() - 1].insert(face);
        }
    }
    const std::size_t top = faces.size();
    std::vector<std::vector<std::vector<long>>> ordered(top);
    std::vector<std::vector<std::string>> labels(top);
    for (std::size_t v = 0; v < top; ++v) {
        ordered[v].assign(faces[v].begin(), faces[v].end());
        for (const auto& s : ordered[v])
            labels[v].push_back(simplex_label(s));
    }
    Ring z = Ring::integers();
    std::vector<SparseMatrix> maps;
    for (std::size_t v = 1; v < top; ++v) {
        SparseMatrix m(z, ordered[v - 1].size(), ordered[v].size());
        for (std::size_t j = 0; j < ordered[v].size(); ++j) {
            const auto& s = ordered[v][j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<long> face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                auto it = std::lower_bound(ordered[v - 1].begin(), ordered[v - 1].end(), face);
                m.set(static_cast<std::size_t>(it - ordered[v - 1].begin()), j, i % 2 == 0 ? 1 : -1);
            }
        }
        maps.push_back(std::move(m));
    }
    return ChainComplex(z, std::move(labels), std::move(maps));
}

}  // namespace ccs
