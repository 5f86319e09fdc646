#include "ccshell/cone.hpp"

#include "ccshell/error.hpp"
#include "ccshell/homology.hpp"
#include "ccshell/linalg.hpp"
#include "shelling_search.hpp"

#include <algorithm>
#include <functional>

namespace ccs {

namespace {

// Support independence: no member's boundary set lies inside the union of
// the others'.
bool independent(const ChainComplex& c, const std::vector<Cell>& s, std::optional<Cell>* offender = nullptr)
{
    for (std::size_t j = 0; j < s.size(); ++j) {
        CellSet u = c.empty_set();
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != j)
                for (Cell b : c.bd(s[i]))
                    u.set(c.flat(b));
        const auto& mine = c.bd(s[j]);
        if (std::all_of(mine.begin(), mine.end(), [&](Cell b) { return u.test(c.flat(b)); })) {
            if (offender)
                *offender = s[j];
            return false;
        }
    }
    return true;
}

Vector unit_vector(std::size_t n, std::size_t k)
{
    Vector v(n);
    v[k] = 1;
    return v;
}

std::vector<std::size_t> indices(const std::vector<Cell>& cells)
{
    std::vector<std::size_t> out;
    for (Cell e : cells)
        out.push_back(e.index);
    return out;
}

// Witnesses for every element of degree v outside S, or empty if one fails.
std::optional<std::vector<ConeWitness>> fill_in(const ChainComplex& c, unsigned v, const std::vector<Cell>& s)
{
    std::vector<ConeWitness> out;
    const SparseMatrix& up = c.boundary(v + 1);
    for (Cell e : c.cells(v)) {
        if (std::find(s.begin(), s.end(), e) != s.end())
            continue;
        auto sol = solve_in_quotient(up, unit_vector(c.rank(v), e.index), indices(s), true);
        if (!sol)
            return std::nullopt;
        out.push_back(ConeWitness{e, chain_from_vector(c, v + 1, sol->x), sol->c});
    }
    return out;
}

const ConeWitness* witness_for(const ConeAssignment& a, Cell target)
{
    for (const auto& w : a.witnesses)
        if (w.target == target)
            return &w;
    return nullptr;
}

}  // namespace

std::optional<ConeViolation> verify_cone(const ChainComplex& c, const ConeAssignment& assign)
{
    const unsigned d = c.order();
    const Ring& ring = c.ring();
    auto fail = [](std::string cond, std::optional<Cell> e, std::string detail) {
        return ConeViolation{std::move(cond), e, std::move(detail)};
    };
    if (assign.sets.size() != d + 1)
        return fail("structure", std::nullopt, "expected one set per degree 0.." + std::to_string(d));
    for (unsigned v = 0; v <= d; ++v) {
        std::vector<Cell> s = assign.sets[v];
        std::sort(s.begin(), s.end());
        if (s.empty())
            return fail("structure", std::nullopt, "S_" + std::to_string(v) + " is empty");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            return fail("structure", std::nullopt, "S_" + std::to_string(v) + " repeats an element");
        for (Cell e : s)
            if (e.degree != v || e.index >= c.rank(v))
                return fail("structure", std::nullopt, "S_" + std::to_string(v) + " names a foreign element");
    }
    if (assign.sets[0].size() != 1)
        return fail("structure", std::nullopt, "S_0 must hold exactly one element");
    if (d >= 1 && assign.sets[d].size() != c.rank(d))
        return fail("structure", std::nullopt, "S_d must be the whole top basis");

    for (unsigned v = 1; v < d; ++v) {
        std::optional<Cell> bad;
        if (!independent(c, assign.sets[v], &bad))
            return fail("1a", bad, "bd(" + c.name(*bad) + ") lies in the boundaries of the rest of S_" +
                                       std::to_string(v));
    }
    if (d >= 1 && rank(c.boundary(d)) != c.rank(d))
        return fail("1a", std::nullopt, "the top boundary map has a kernel");

    for (unsigned v = 1; v < d; ++v) {
        const auto& s = assign.sets[v];
        for (Cell e : c.cells(v)) {
            if (std::find(s.begin(), s.end(), e) != s.end())
                continue;
            const ConeWitness* w = witness_for(assign, e);
            if (!w)
                return fail("1b", e, "no witness for " + c.name(e));
            if (w->tau.degree != v + 1 || !ring.is_unit(w->c))
                return fail("1b", e, "witness for " + c.name(e) + " has the wrong degree or a non-unit coefficient");
            Chain img = apply_boundary(c, w->tau);
            Vector r = chain_to_vector(c, img);
            r[e.index] = ring.sub(r[e.index], w->c);
            for (std::size_t i = 0; i < r.size(); ++i)
                if (r[i] != 0 && std::find(s.begin(), s.end(), Cell{v, static_cast<std::uint32_t>(i)}) == s.end())
                    return fail("1b", e, "remainder of the witness for " + c.name(e) + " leaves S_" +
                                             std::to_string(v));
        }
    }

    if (d >= 1 && min_boundary_support(c) < 2)
        return fail("2", std::nullopt, "some 1-chain has a boundary with a single basis element");

    const Cell apex = assign.sets[0][0];
    for (Cell e : c.cells(0)) {
        if (e == apex)
            continue;
        const ConeWitness* w = witness_for(assign, e);
        if (!w)
            return fail("3", e, "no witness for " + c.name(e));
        if (w->tau.degree != 1 || !ring.is_unit(w->c))
            return fail("3", e, "witness for " + c.name(e) + " has the wrong degree or a non-unit coefficient");
        Vector r = chain_to_vector(c, apply_boundary(c, w->tau));
        r[e.index] = ring.sub(r[e.index], w->c);
        if (r[apex.index] == 0)
            return fail("3", e, "witness for " + c.name(e) + " misses the distinguished vertex");
        for (std::size_t i = 0; i < r.size(); ++i)
            if (i != apex.index && r[i] != 0)
                return fail("3", e, "boundary of the witness for " + c.name(e) + " has extra terms");
    }
    return std::nullopt;
}

std::optional<ConeAssignment> search_cone(const ChainComplex& c, const SearchOptions& options)
{
    const unsigned d = c.order();
    ConeAssignment out;
    out.sets.resize(d + 1);
    if (d == 0) {
        if (c.rank(0) != 1)
            return std::nullopt;
        out.sets[0] = c.cells(0);
        return out;
    }
    if (min_boundary_support(c) < 2)
        return std::nullopt;
    if (rank(c.boundary(d)) != c.rank(d))
        return std::nullopt;
    out.sets[d] = c.cells(d);

    detail::Budget budget(options.budget);
    for (unsigned v = d - 1; v >= 1; --v) {
        const std::vector<Cell> all = c.cells(v);
        std::vector<bool> forced(all.size(), false);
        for (std::size_t i = 0; i < all.size(); ++i)
            forced[i] = c.is_maximal(all[i]);
        std::vector<Cell> chosen;
        std::optional<std::vector<ConeWitness>> found;

        // Support independence survives shrinking and the fill-in condition
        // survives growing, so maximal independent sets suffice.
        std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
            budget.tick();
            if (i == all.size()) {
                for (std::size_t k = 0; k < all.size(); ++k) {
                    if (std::find(chosen.begin(), chosen.end(), all[k]) != chosen.end())
                        continue;
                    chosen.push_back(all[k]);
                    bool extends = independent(c, chosen);
                    chosen.pop_back();
                    if (extends)
                        return false;
                }
                if (chosen.empty())
                    return false;
                found = fill_in(c, v, chosen);
                return found.has_value();
            }
            chosen.push_back(all[i]);
            if (independent(c, chosen) && dfs(i + 1))
                return true;
            chosen.pop_back();
            return !forced[i] && dfs(i + 1);
        };
        if (!dfs(0))
            return std::nullopt;
        out.sets[v] = chosen;
        out.witnesses.insert(out.witnesses.end(), found->begin(), found->end());
    }

    for (Cell apex : c.cells(0)) {
        bool allowed = true;
        for (Cell e : c.cells(0))
            if (e != apex && c.is_maximal(e))
                allowed = false;
        if (!allowed)
            continue;
        budget.tick();
        std::vector<ConeWitness> ws;
        bool ok = true;
        for (Cell e : c.cells(0)) {
            if (e == apex)
                continue;
            auto sol = solve_in_quotient(c.boundary(1), unit_vector(c.rank(0), e.index), {apex.index}, true);
            if (!sol) {
                ok = false;
                break;
            }
            Chain tau = chain_from_vector(c, 1, sol->x);
            if (apply_boundary(c, tau)(apex.index) == 0) {
                ok = false;
                break;
            }
            ws.push_back(ConeWitness{e, tau, sol->c});
        }
        if (!ok)
            continue;
        out.sets[0] = {apex};
        out.witnesses.insert(out.witnesses.end(), ws.begin(), ws.end());
        return out;
    }
    return std::nullopt;
}

}  // namespace ccs
