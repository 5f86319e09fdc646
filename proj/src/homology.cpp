#include "ccshell/homology.hpp"

#include "ccshell/error.hpp"
#include "ccshell/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ccs {

namespace {

std::string ring_symbol(const Ring& ring)
{
    switch (ring.kind()) {
    case Ring::Kind::Integers: return "Z";
    case Ring::Kind::Rationals: return "Q";
    case Ring::Kind::PrimeField: return "F" + ring.characteristic().get_str();
    }
    return "R";
}

// Homology at one position given the outgoing and incoming maps.
FGModule homology_at(const Ring& ring, std::size_t n, const SparseMatrix* out, const SparseMatrix* in)
{
    // Coordinates on ker(out): rows rank..n-1 of V^{-1} in the Smith form of out.
    std::size_t r = 0;
    DenseMatrix coords = DenseMatrix::identity(n);
    if (out && out->rows() > 0 && !out->is_zero()) {
        SNFDecomposition snf = smith_normal_form(*out);
        r = snf.rank;
        coords = DenseMatrix(n - r, n);
        for (std::size_t i = r; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                coords(i - r, j) = snf.V_inv(i, j);
    }
    FGModule m;
    const std::size_t kernel_rank = n - r;
    if (!in || in->cols() == 0) {
        m.free_rank = kernel_rank;
        return m;
    }
    // The image of `in` lies in the kernel, so its kernel coordinates are exact.
    DenseMatrix image = multiply(ring, coords, in->to_dense());
    Vector d = invariant_factors(SparseMatrix::from_dense(ring, image));
    m.free_rank = kernel_rank - d.size();
    if (!ring.is_field())
        for (const auto& x : d)
            if (x != 1)
                m.torsion.push_back(x.get_num());
    return m;
}

}  // namespace

std::string to_string(const FGModule& m, const Ring& ring)
{
    if (m.is_zero())
        return "0";
    const std::string s = ring_symbol(ring);
    std::vector<std::string> parts;
    if (m.free_rank == 1)
        parts.push_back(s);
    else if (m.free_rank > 1)
        parts.push_back(s + "^" + std::to_string(m.free_rank));
    for (const auto& t : m.torsion)
        parts.push_back(s + "/" + t.get_str());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? " + " : "") + parts[i];
    return out;
}

FGModule parse_module(const std::string& text)
{
    FGModule m;
    if (text == "0")
        return m;
    std::stringstream ss(text);
    std::string part;
    auto bad = [&]() { return Error(ErrorKind::InvalidInput, "cannot read module '" + text + "'"); };
    while (std::getline(ss, part, '+')) {
        part.erase(0, part.find_first_not_of(' '));
        part.erase(part.find_last_not_of(' ') + 1);
        if (part == "Z") {
            m.free_rank += 1;
        } else if (part.rfind("Z^", 0) == 0) {
            try {
                m.free_rank += std::stoul(part.substr(2));
            } catch (...) {
                throw bad();
            }
        } else if (part.rfind("Z/", 0) == 0) {
            try {
                m.torsion.emplace_back(part.substr(2));
            } catch (...) {
                throw bad();
            }
        } else {
            throw bad();
        }
    }
    return m;
}

std::vector<FGModule> sequence_homology(const Ring& ring, const std::vector<std::size_t>& dims,
                                        const std::vector<SparseMatrix>& maps)
{
    std::vector<FGModule> out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const SparseMatrix* outgoing = i > 0 ? &maps[i - 1] : nullptr;
        const SparseMatrix* incoming = i < maps.size() ? &maps[i] : nullptr;
        out.push_back(homology_at(ring, dims[i], outgoing, incoming));
    }
    return out;
}

std::vector<FGModule> homology(const ChainComplex& c)
{
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> maps;
    for (unsigned v = 0; v <= c.order(); ++v)
        dims.push_back(c.rank(v));
    for (unsigned v = 1; v <= c.order(); ++v)
        maps.push_back(c.boundary(v));
    return sequence_homology(c.ring(), dims, maps);
}

std::size_t min_boundary_support(const ChainComplex& c)
{
    if (c.order() == 0 || c.boundary(1).is_zero())
        return kInfiniteSupport;
    SNFDecomposition snf = smith_normal_form(c.boundary(1));
    const std::size_t k0 = c.rank(0);
    for (std::size_t l = 0; l < k0; ++l) {
        // Some nonzero multiple of e_l lies in the image iff U e_l vanishes
        // below the rank.
        bool in_span = true;
        for (std::size_t i = snf.rank; i < k0 && in_span; ++i)
            in_span = snf.U(i, l) == 0;
        if (in_span)
            return 1;
    }
    return 2;
}

std::optional<Augmentation> build_augmentation(const ChainComplex& c)
{
    const Ring& ring = c.ring();
    const std::size_t k0 = c.rank(0);
    Augmentation eps{Vector(k0)};
    std::vector<std::size_t> rows;
    for (std::size_t l = 0; l < k0; ++l) {
        if (c.cofaces(Cell{0, static_cast<std::uint32_t>(l)}).empty())
            eps.values[l] = 1;
        else
            rows.push_back(l);
    }
    if (rows.empty())
        return eps;

    SparseMatrix t = c.boundary(1).select_rows(rows).transpose();
    std::vector<Vector> basis = kernel_basis(t);
    const std::size_t n = rows.size();
    for (std::size_t l = 0; l < n; ++l) {
        bool forced_zero = std::all_of(basis.begin(), basis.end(), [&](const Vector& v) { return v[l] == 0; });
        if (forced_zero)
            return std::nullopt;
    }

    Vector e(n);
    for (const auto& v : basis)
        for (std::size_t l = 0; l < n; ++l)
            e[l] = ring.add(e[l], v[l]);
    for (std::size_t l = 0; l < n; ++l) {
        if (e[l] != 0)
            continue;
        const Vector* fix = nullptr;
        for (const auto& v : basis)
            if (v[l] != 0) {
                fix = &v;
                break;
            }
        // Each nonzero coordinate rules out at most one multiplier.
        bool placed = false;
        for (long s = 1; s <= static_cast<long>(n) + 1 && !placed; ++s) {
            if (ring.kind() == Ring::Kind::PrimeField && ring.characteristic() <= s)
                break;
            Vector cand(n);
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                cand[i] = ring.add(e[i], ring.mul(Scalar(s), (*fix)[i]));
                if (e[i] != 0 && cand[i] == 0)
                    ok = false;
            }
            if (ok) {
                e = cand;
                placed = true;
            }
        }
        if (!placed)
            return std::nullopt;
    }

    if (ring.kind() == Ring::Kind::Integers) {
        mpz_class g = 0;
        for (const auto& x : e)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
        for (auto& x : e)
            x = Scalar(mpz_class(x.get_num() / g));
    }
    if (e[0] < 0 && ring.kind() != Ring::Kind::PrimeField)
        for (auto& x : e)
            x = -x;
    for (std::size_t i = 0; i < n; ++i)
        eps.values[rows[i]] = e[i];
    return eps;
}

void check_augmentation(const ChainComplex& c, const Augmentation& eps)
{
    const Ring& ring = c.ring();
    if (eps.values.size() != c.rank(0))
        throw Error(ErrorKind::InvalidAugmentation, "augmentation has the wrong length");
    for (std::size_t l = 0; l < eps.values.size(); ++l)
        if (ring.reduce(eps.values[l]) == 0)
            throw Error(ErrorKind::InvalidAugmentation, "augmentation vanishes on " +
                                                            c.name(Cell{0, static_cast<std::uint32_t>(l)}));
    if (c.order() == 0)
        return;
    const SparseMatrix& d1 = c.boundary(1);
    for (std::size_t j = 0; j < d1.cols(); ++j) {
        Scalar s = 0;
        for (const auto& [i, x] : d1.column(j))
            s = ring.add(s, ring.mul(x, eps.values[i]));
        if (s != 0)
            throw Error(ErrorKind::InvalidAugmentation, "augmentation does not vanish on the boundary of " +
                                                            c.name(Cell{1, static_cast<std::uint32_t>(j)}));
    }
}

std::vector<FGModule> reduced_homology(const ChainComplex& c, const Augmentation& eps)
{
    check_augmentation(c, eps);
    std::vector<std::size_t> dims{1};
    std::vector<SparseMatrix> maps;
    SparseMatrix e(c.ring(), 1, c.rank(0));
    for (std::size_t l = 0; l < c.rank(0); ++l)
        e.set(0, l, eps.values[l]);
    maps.push_back(std::move(e));
    for (unsigned v = 0; v <= c.order(); ++v)
        dims.push_back(c.rank(v));
    for (unsigned v = 1; v <= c.order(); ++v)
        maps.push_back(c.boundary(v));
    std::vector<FGModule> all = sequence_homology(c.ring(), dims, maps);
    return std::vector<FGModule>(all.begin() + 1, all.end());
}

bool is_acyclic(const std::vector<FGModule>& h)
{
    if (h.empty() || h[0].free_rank != 1 || !h[0].torsion.empty())
        return false;
    return std::all_of(h.begin() + 1, h.end(), [](const FGModule& m) { return m.is_zero(); });
}

bool is_acyclic(const ChainComplex& c) { return is_acyclic(homology(c)); }

}  // namespace ccs
