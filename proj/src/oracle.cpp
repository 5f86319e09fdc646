#include "ccshell/oracle.hpp"

#include "ccshell/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ccs {

namespace {

using CellTree = std::set<Cell>;

// Plain transcription of the shelling definition over std::set, kept apart
// from the search code on purpose.
class BruteShelling {
public:
    explicit BruteShelling(const ChainComplex& c) : c_(c) {}

    const CellTree& closure_of(Cell e)
    {
        auto it = closures_.find(e);
        if (it != closures_.end())
            return it->second;
        CellTree out{e};
        for (Cell b : c_.bd(e)) {
            const CellTree& sub = closure_of(b);
            out.insert(sub.begin(), sub.end());
        }
        return closures_.emplace(e, std::move(out)).first->second;
    }

    // Valid orders of `domain` beginning with `prefix`; `visit` receives each
    // order with its child nodes and returns true to stop.
    void orders(const std::vector<Cell>& domain, const CellTree& prefix,
                const std::function<bool(const std::vector<Cell>&, const std::vector<std::optional<std::size_t>>&)>&
                    visit)
    {
        std::vector<Cell> order;
        std::vector<std::optional<std::size_t>> children;
        std::vector<bool> used(domain.size(), false);
        CellTree covered;
        bool stop = false;
        std::function<void()> dfs = [&] {
            if (stop)
                return;
            if (order.size() == domain.size()) {
                stop = visit(order, children);
                return;
            }
            const bool in_prefix = order.size() < prefix.size();
            for (std::size_t k = 0; k < domain.size() && !stop; ++k) {
                if (used[k] || (prefix.count(domain[k]) != 0) != in_prefix)
                    continue;
                const Cell g = domain[k];
                const CellTree& cl = closure_of(g);
                CellTree inter;
                std::set_intersection(cl.begin(), cl.end(), covered.begin(), covered.end(),
                                      std::inserter(inter, inter.end()));
                std::optional<std::size_t> child;
                if (!order.empty() && !pure_of_order(inter, g.degree))
                    continue;
                if (g.degree > 0) {
                    CellTree p;
                    for (Cell x : inter)
                        if (x.degree + 1 == g.degree)
                            p.insert(x);
                    child = node(g, p);
                    if (!child)
                        continue;
                }
                CellTree saved = covered;
                covered.insert(cl.begin(), cl.end());
                used[k] = true;
                order.push_back(g);
                children.push_back(child);
                dfs();
                order.pop_back();
                children.pop_back();
                used[k] = false;
                covered = std::move(saved);
            }
        };
        dfs();
    }

    std::vector<ShellingNode>& nodes() { return nodes_; }

private:
    // Intersection condition for an element of degree s.
    bool pure_of_order(const CellTree& inter, unsigned s) const
    {
        if (s == 0)
            return true;
        if (inter.empty())
            return false;
        for (Cell x : inter) {
            if (x.degree > s - 1)
                return false;
            if (x.degree < s - 1) {
                const auto& up = c_.cofaces(x);
                if (std::none_of(up.begin(), up.end(), [&](Cell f) { return inter.count(f) != 0; }))
                    return false;
            }
        }
        return true;
    }

    std::optional<std::size_t> node(Cell g, const CellTree& prefix)
    {
        auto key = std::make_pair(g, std::vector<Cell>(prefix.begin(), prefix.end()));
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::optional<std::size_t> found;
        const auto& domain = c_.bd(g);
        if (!domain.empty()) {
            orders(domain, prefix, [&](const auto& order, const auto& children) {
                nodes_.push_back(ShellingNode{g, key.second, order, children});
                found = nodes_.size() - 1;
                return true;
            });
        }
        memo_[key] = found;
        return found;
    }

    const ChainComplex& c_;
    std::map<Cell, CellTree> closures_;
    std::map<std::pair<Cell, std::vector<Cell>>, std::optional<std::size_t>> memo_;
    std::vector<ShellingNode> nodes_;
};

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix integer_matrix(const SparseMatrix& m)
{
    IntMatrix a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, x] : m.column(j))
            a[i][j] = x.get_num();
    return a;
}

// Absolute nonzero diagonal of a diagonalization, turned into a
// divisibility chain with gcd/lcm swaps.
std::vector<mpz_class> integer_invariants(IntMatrix a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                goto done;
            std::swap(a[t], a[pi]);
            for (auto& row : a)
                std::swap(row[t], row[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                mpz_class q = a[i][t] / a[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j)
                        a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                mpz_class q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i)
                        a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (clean)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
done:
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            mpz_class g = gcd(diag[i], diag[j]);
            mpz_class l = lcm(diag[i], diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

std::size_t field_rank(const Ring& ring, const SparseMatrix& m)
{
    DenseMatrix a = m.to_dense();
    std::size_t r = 0;
    for (std::size_t j = 0; j < a.cols() && r < a.rows(); ++j) {
        std::size_t p = r;
        while (p < a.rows() && a(p, j) == 0)
            ++p;
        if (p == a.rows())
            continue;
        for (std::size_t k = 0; k < a.cols(); ++k)
            std::swap(a(r, k), a(p, k));
        const Scalar inv = ring.inverse(a(r, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, j) == 0)
                continue;
            const Scalar f = ring.mul(a(i, j), inv);
            for (std::size_t k = j; k < a.cols(); ++k)
                a(i, k) = ring.sub(a(i, k), ring.mul(f, a(r, k)));
        }
        ++r;
    }
    return r;
}

}  // namespace

std::vector<ShellingCertificate> brute_shellings(const ChainComplex& c)
{
    const auto gamma = maximal_elements(c);
    if (gamma.size() > 5 || c.size() > 12)
        throw Error(ErrorKind::TooLarge, "brute force is limited to |Gamma| <= 5 and 12 basis elements");
    BruteShelling brute(c);
    std::vector<ShellingCertificate> out;
    brute.orders(gamma, {}, [&](const auto& order, const auto& children) {
        ShellingCertificate cert;
        cert.nodes = brute.nodes();
        cert.nodes.push_back(ShellingNode{std::nullopt, {}, order, children});
        cert.root = cert.nodes.size() - 1;
        out.push_back(compact(cert));
        return false;
    });
    return out;
}

std::vector<FGModule> dense_homology_oracle(const ChainComplex& c)
{
    if (c.size() > 64)
        throw Error(ErrorKind::TooLarge, "dense oracle is limited to 64 basis elements");
    const Ring& ring = c.ring();
    const unsigned d = c.order();
    std::vector<std::size_t> ranks(d + 2, 0);
    std::vector<std::vector<mpz_class>> factors(d + 2);
    for (unsigned v = 1; v <= d; ++v) {
        if (ring.is_field()) {
            ranks[v] = field_rank(ring, c.boundary(v));
        } else {
            factors[v] = integer_invariants(integer_matrix(c.boundary(v)));
            ranks[v] = factors[v].size();
        }
    }
    std::vector<FGModule> out;
    for (unsigned v = 0; v <= d; ++v) {
        FGModule m;
        m.free_rank = c.rank(v) - ranks[v] - ranks[v + 1];
        for (const auto& t : factors[v + 1])
            if (t != 1)
                m.torsion.push_back(t);
        out.push_back(std::move(m));
    }
    return out;
}

SparseMatrix random_matrix(std::mt19937_64& rng, const Ring& ring, std::size_t rows, std::size_t cols, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    SparseMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, dist(rng));
    return m;
}

namespace {

using Face = std::vector<long>;

bool fits(const ChainComplex& c, const GeneratorConfig& cfg)
{
    for (unsigned v = 0; v <= c.order(); ++v)
        if (c.rank(v) > cfg.max_cells)
            return false;
    return true;
}

unsigned pick(std::mt19937_64& rng, unsigned lo, unsigned hi)
{
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

Face random_face(std::mt19937_64& rng, unsigned n, unsigned size)
{
    Face all(n);
    for (unsigned i = 0; i < n; ++i)
        all[i] = i + 1;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Face> random_facets(std::mt19937_64& rng, const GeneratorConfig& cfg, unsigned n)
{
    const unsigned top = std::min(cfg.max_order, n - 1);
    const unsigned dim = pick(rng, 0, top);
    std::vector<Face> facets;
    const unsigned count = pick(rng, 1, 4);
    for (unsigned k = 0; k < count; ++k) {
        unsigned size = cfg.ensure_pure || k == 0 ? dim + 1 : pick(rng, 1, dim + 1);
        facets.push_back(random_face(rng, n, size));
    }
    return facets;
}

// All faces componentwise below some generator: a shifted family.
std::vector<Face> shifted_facets(std::mt19937_64& rng, const GeneratorConfig& cfg, unsigned n)
{
    const unsigned dim = std::min(cfg.max_order, n - 1);
    std::vector<Face> generators;
    const unsigned count = pick(rng, 1, 3);
    for (unsigned k = 0; k < count; ++k) {
        unsigned size = cfg.ensure_pure || k == 0 ? dim + 1 : pick(rng, 1, dim + 1);
        generators.push_back(random_face(rng, n, size));
    }
    std::vector<Face> out;
    for (const auto& g : generators) {
        const unsigned s = static_cast<unsigned>(g.size());
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<unsigned>(__builtin_popcount(mask)) != s)
                continue;
            Face f;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (1u << i))
                    f.push_back(i + 1);
            bool below = true;
            for (unsigned i = 0; i < s; ++i)
                below = below && f[i] <= g[i];
            if (below)
                out.push_back(f);
        }
    }
    return out;
}

// Random unimodular basis changes inside each degree: d_v -> d_v A and
// d_{v+1} -> A^{-1} d_{v+1}.
ChainComplex perturb(std::mt19937_64& rng, const ChainComplex& c, int range)
{
    const unsigned d = c.order();
    std::vector<DenseMatrix> maps;
    for (unsigned v = 1; v <= d; ++v)
        maps.push_back(c.boundary(v).to_dense());
    std::uniform_int_distribution<int> coeff(-std::max(range, 1), std::max(range, 1));
    for (unsigned v = 0; v <= d; ++v) {
        const std::size_t k = c.rank(v);
        if (k == 0)
            continue;
        const unsigned ops = pick(rng, 0, 3);
        for (unsigned t = 0; t < ops; ++t) {
            std::size_t i = pick(rng, 0, static_cast<unsigned>(k - 1));
            if (k < 2 || pick(rng, 0, 3) == 0) {
                // e_i -> -e_i
                if (v >= 1)
                    for (std::size_t r = 0; r < maps[v - 1].rows(); ++r)
                        maps[v - 1](r, i) = -maps[v - 1](r, i);
                if (v < d)
                    for (std::size_t col = 0; col < maps[v].cols(); ++col)
                        maps[v](i, col) = -maps[v](i, col);
                continue;
            }
            std::size_t j = pick(rng, 0, static_cast<unsigned>(k - 2));
            if (j >= i)
                ++j;
            int s = coeff(rng);
            if (s == 0)
                continue;
            // New basis element e_i' = e_i + s e_j.
            if (v >= 1)
                for (std::size_t r = 0; r < maps[v - 1].rows(); ++r)
                    maps[v - 1](r, i) += s * maps[v - 1](r, j);
            if (v < d)
                for (std::size_t col = 0; col < maps[v].cols(); ++col)
                    maps[v](j, col) -= s * maps[v](i, col);
        }
    }
    // Scaling the boundary of a maximal element keeps d o d = 0 and brings in
    // torsion and strictly precritical elements.
    for (unsigned v = 1; v <= d; ++v)
        for (std::size_t i = 0; i < c.rank(v); ++i) {
            bool maximal = true;
            if (v < d)
                for (std::size_t col = 0; col < maps[v].cols(); ++col)
                    maximal = maximal && maps[v](i, col) == 0;
            if (!maximal || pick(rng, 0, 2) != 0)
                continue;
            int s = coeff(rng);
            if (s == 0)
                s = 2;
            for (std::size_t r = 0; r < maps[v - 1].rows(); ++r)
                maps[v - 1](r, i) *= s;
        }
    std::vector<std::vector<std::string>> labels(d + 1);
    for (unsigned v = 0; v <= d; ++v)
        labels[v].assign(c.rank(v), "");
    std::vector<SparseMatrix> sparse;
    for (const auto& m : maps)
        sparse.push_back(SparseMatrix::from_dense(c.ring(), m));
    return ChainComplex(c.ring(), labels, sparse);
}

}  // namespace

ChainComplex generate(const GeneratorConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed);
    for (unsigned attempt = 0;; ++attempt) {
        unsigned n = cfg.vertices ? cfg.vertices : pick(rng, 3, 6);
        if (!cfg.vertices && attempt > 50)
            n = 3;
        std::vector<Face> facets = cfg.source == GeneratorConfig::Source::ShiftedComplex
                                       ? shifted_facets(rng, cfg, n)
                                       : random_facets(rng, cfg, n);
        ChainComplex c = from_simplicial(facets);
        if (!fits(c, cfg) && attempt < 200)
            continue;
        if (cfg.source != GeneratorConfig::Source::RandomBoundary)
            return c;
        // A basis change can cancel a whole row and break purity.
        ChainComplex p = perturb(rng, c, cfg.coeff_range);
        if (!cfg.ensure_pure || is_pure(p) || attempt >= 200)
            return p;
    }
}

}  // namespace ccs
