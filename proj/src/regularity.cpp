#include "ccshell/regularity.hpp"

#include "ccshell/error.hpp"
#include "ccshell/homology.hpp"
#include "shelling_search.hpp"

#include <algorithm>
#include <set>

namespace ccs {

namespace {

using detail::ShellingSearch;
using Violation = RegularViolation;
using Cond = RegularViolation::Condition;

// bd(e) is contained in the union of bd(f) over f in `earlier`.
bool covered(const ChainComplex& c, Cell e, const std::vector<Cell>& earlier)
{
    CellSet u = c.empty_set();
    for (Cell f : earlier)
        for (Cell b : c.bd(f))
            u.set(c.flat(b));
    const auto& mine = c.bd(e);
    return std::all_of(mine.begin(), mine.end(), [&](Cell b) { return u.test(c.flat(b)); });
}

bool terms_within(const Relation& r, const std::vector<Cell>& earlier)
{
    return std::all_of(r.terms.begin(), r.terms.end(), [&](const auto& t) {
        return std::find(earlier.begin(), earlier.end(), t.first) != earlier.end();
    });
}

std::vector<Cell> non_maximal(const ChainComplex& c, unsigned degree)
{
    std::vector<Cell> out;
    for (Cell e : c.cells(degree))
        if (!c.is_maximal(e))
            out.push_back(e);
    return out;
}

std::vector<Cell> of_degree(const std::vector<Cell>& cells, unsigned degree)
{
    std::vector<Cell> out;
    for (Cell e : cells)
        if (e.degree == degree)
            out.push_back(e);
    return out;
}

// bd(e_l) meets the boundaries of the earlier elements here.
std::vector<Cell> boundary_prefix(const ChainComplex& c, const std::vector<Cell>& ordering, std::size_t l)
{
    CellSet u = c.empty_set();
    for (std::size_t i = 0; i < l; ++i)
        for (Cell b : c.bd(ordering[i]))
            u.set(c.flat(b));
    std::vector<Cell> out;
    for (Cell b : c.bd(ordering[l]))
        if (u.test(c.flat(b)))
            out.push_back(b);
    return out;
}

// Relations demanded by the first condition, or the first element lacking one.
std::optional<Violation> first_condition(const ChainComplex& c, const std::vector<Cell>& gamma,
                                         std::map<Cell, Relation>& out)
{
    for (std::size_t p = 0; p < gamma.size(); ++p) {
        Cell e = gamma[p];
        std::vector<Cell> earlier = non_maximal(c, e.degree);
        for (std::size_t q = 0; q < p; ++q)
            if (gamma[q].degree == e.degree)
                earlier.push_back(gamma[q]);
        if (!covered(c, e, earlier))
            continue;
        auto r = find_relation(c, e, earlier, false);
        if (!r)
            return Violation{Cond::Condition1, e, p,
                             "bd(" + c.name(e) + ") is covered by earlier boundaries but " + c.name(e) +
                                 " is not precritical"};
        out[e] = *r;
    }
    return std::nullopt;
}

// Chooses boundary orders degree by degree for a fixed Gamma order.
class Assigner {
public:
    Assigner(const ChainComplex& c, ShellingSearch& search, const std::vector<Cell>& gamma)
        : c_(c), search_(search), gamma_(gamma), seen_(c.order() + 1), orders_(c.order() + 1)
    {
        orderings_.resize(c.order() + 1);
    }

    bool run()
    {
        const unsigned d = c_.order();
        orderings_[d] = of_degree(gamma_, d);
        return degree(d);
    }

    std::vector<std::vector<Cell>> orderings_;
    std::map<Cell, std::size_t> nodes_;
    std::map<std::pair<Cell, std::size_t>, Relation> relations_;
    std::optional<Cell> stuck_;

private:
    bool degree(unsigned v)
    {
        if (v == 0)
            return true;
        orders_[v].assign(orderings_[v].size(), {});
        return element(v, 0);
    }

    bool element(unsigned v, std::size_t l)
    {
        const std::vector<Cell>& ordering = orderings_[v];
        if (l == ordering.size()) {
            std::vector<Cell> lower = segment_ordering(c_, ordering, orders_[v], of_degree(gamma_, v - 1));
            // Boundary orders of degree-v elements only matter below through
            // the second condition at degree v - 1, which is vacuous there
            // unless v - 1 >= 2.
            if (v - 1 >= 2 && !seen_[v - 1].insert(lower).second)
                return false;
            orderings_[v - 1] = lower;
            return degree(v - 1);
        }
        Cell e = ordering[l];
        std::vector<Cell> prefix = boundary_prefix(c_, ordering, l);
        std::sort(prefix.begin(), prefix.end());
        auto filter = [&](const std::vector<Cell>& placed, Cell f) {
            if (!covered(c_, f, placed))
                return true;
            return find_relation(c_, f, placed, false).has_value();
        };
        bool result = false;
        bool any = false;
        search_.enumerate(c_.bd(e), prefix, false, filter,
                          [&](const std::vector<Cell>& order, const std::vector<std::optional<std::size_t>>& ch) {
                              any = true;
                              record(e, prefix, order, ch);
                              orders_[v][l] = order;
                              bool ok = element(v, l + 1);
                              if (ok || v < 3) {
                                  result = ok;
                                  return true;
                              }
                              return false;
                          });
        if (!any && !stuck_)
            stuck_ = e;
        return result;
    }

    void record(Cell e, const std::vector<Cell>& prefix, const std::vector<Cell>& order,
                const std::vector<std::optional<std::size_t>>& ch)
    {
        auto& nodes = search_.nodes();
        nodes.push_back(ShellingNode{e, prefix, order, ch});
        nodes_[e] = nodes.size() - 1;
        for (auto it = relations_.lower_bound({e, 0}); it != relations_.end() && it->first.first == e;)
            it = relations_.erase(it);
        for (std::size_t j = 0; j < order.size(); ++j) {
            std::vector<Cell> earlier(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j));
            if (covered(c_, order[j], earlier))
                relations_[{e, j}] = *find_relation(c_, order[j], earlier, false);
        }
    }

    const ChainComplex& c_;
    ShellingSearch& search_;
    const std::vector<Cell>& gamma_;
    std::vector<std::set<std::vector<Cell>>> seen_;
    std::vector<std::vector<std::vector<Cell>>> orders_;  // boundary orders per degree
};

RegularCertificate assemble(ShellingSearch& search, const std::vector<Cell>& gamma,
                            const std::vector<std::optional<std::size_t>>& children, const Assigner& a,
                            std::map<Cell, Relation> cond1)
{
    ShellingCertificate raw;
    raw.nodes = search.nodes();
    raw.nodes.push_back(ShellingNode{std::nullopt, {}, gamma, children});
    raw.root = raw.nodes.size() - 1;
    std::vector<Cell> keys;
    std::vector<std::size_t> keep;
    for (const auto& [e, idx] : a.nodes_) {
        keys.push_back(e);
        keep.push_back(idx);
    }
    RegularCertificate cert;
    cert.shelling = compact(raw, &keep);
    for (std::size_t i = 0; i < keys.size(); ++i)
        cert.boundary_nodes[keys[i]] = keep[i];
    cert.degree_orderings = a.orderings_;
    cert.condition1 = std::move(cond1);
    cert.condition2 = a.relations_;
    return cert;
}

}  // namespace

const char* to_string(RegularViolation::Condition condition)
{
    switch (condition) {
    case Cond::Shelling: return "shelling";
    case Cond::Monotone: return "monotone";
    case Cond::DegreeOrdering: return "degree-ordering";
    case Cond::BoundaryOrdering: return "boundary-ordering";
    case Cond::Condition1: return "condition-1";
    case Cond::Condition2: return "condition-2";
    }
    return "?";
}

std::optional<RegularViolation> verify_regular(const ChainComplex& c, const RegularCertificate& cert)
{
    if (auto v = verify_shelling(c, cert.shelling))
        return Violation{Cond::Shelling, std::nullopt, v->position, v->detail};
    const std::vector<Cell>& gamma = cert.shelling.gamma_order();
    if (auto f = failures(cert.shelling); !f.empty())
        return Violation{Cond::Monotone, gamma[f[0].second], f[0].second, "the Gamma order has failures"};

    const unsigned d = c.order();
    if (cert.degree_orderings.size() != d + 1)
        return Violation{Cond::DegreeOrdering, std::nullopt, 0, "expected one ordering per degree"};
    if (cert.degree_orderings[d] != of_degree(gamma, d))
        return Violation{Cond::DegreeOrdering, std::nullopt, 0, "top degree ordering differs from the Gamma order"};

    for (unsigned v = d; v >= 1; --v) {
        const auto& ordering = cert.degree_orderings[v];
        std::vector<std::vector<Cell>> orders;
        for (std::size_t l = 0; l < ordering.size(); ++l) {
            Cell e = ordering[l];
            auto it = cert.boundary_nodes.find(e);
            if (it == cert.boundary_nodes.end() || it->second >= cert.shelling.nodes.size())
                return Violation{Cond::BoundaryOrdering, e, l, "no boundary order for " + c.name(e)};
            const ShellingNode& node = cert.shelling.nodes[it->second];
            std::vector<Cell> prefix = boundary_prefix(c, ordering, l);
            std::sort(prefix.begin(), prefix.end());
            if (node.cell != e || node.prefix != prefix)
                return Violation{Cond::BoundaryOrdering, e, l,
                                 "boundary order of " + c.name(e) + " has the wrong cell or prefix"};
            if (auto bad = verify_shelling_node(c, cert.shelling, it->second))
                return Violation{Cond::BoundaryOrdering, e, l,
                                 "boundary order of " + c.name(e) + " is not a shelling: " + bad->detail};
            orders.push_back(node.order);
        }
        std::vector<Cell> lower = segment_ordering(c, ordering, orders, of_degree(gamma, v - 1));
        if (lower != cert.degree_orderings[v - 1])
            return Violation{Cond::DegreeOrdering, std::nullopt, 0,
                             "ordering of degree " + std::to_string(v - 1) + " is not the segment ordering"};
    }

    for (unsigned v = 0; v <= d; ++v) {
        const auto& ordering = cert.degree_orderings[v];
        for (std::size_t l = 0; l < ordering.size(); ++l) {
            Cell e = ordering[l];
            if (!c.is_maximal(e))
                continue;
            std::vector<Cell> earlier(ordering.begin(), ordering.begin() + static_cast<std::ptrdiff_t>(l));
            if (!covered(c, e, earlier))
                continue;
            auto it = cert.condition1.find(e);
            if (it == cert.condition1.end() || it->second.target != e || !check_relation(c, it->second) ||
                !terms_within(it->second, earlier))
                return Violation{Cond::Condition1, e, l, "missing or wrong precritical relation for " + c.name(e)};
        }
    }

    for (const auto& [e, idx] : cert.boundary_nodes) {
        const ShellingNode& node = cert.shelling.nodes[idx];
        for (std::size_t j = 0; j < node.order.size(); ++j) {
            std::vector<Cell> earlier(node.order.begin(), node.order.begin() + static_cast<std::ptrdiff_t>(j));
            if (!covered(c, node.order[j], earlier))
                continue;
            auto it = cert.condition2.find({e, j});
            if (it == cert.condition2.end() || it->second.target != node.order[j] || !check_relation(c, it->second) ||
                !terms_within(it->second, earlier))
                return Violation{Cond::Condition2, e, j,
                                 "missing or wrong relation for " + c.name(node.order[j]) + " in bd(" + c.name(e) +
                                     ")"};
        }
    }
    return std::nullopt;
}

RegularResult certify_regular_order(const ChainComplex& c, const std::vector<Cell>& gamma,
                                    const SearchOptions& options)
{
    RegularResult out;
    {
        ShellingCertificate probe;
        probe.nodes.push_back(ShellingNode{std::nullopt, {}, gamma, {}});
        if (auto f = failures(probe); !f.empty()) {
            out.violation = Violation{Cond::Monotone, gamma[f[0].second], f[0].second,
                                      "the order is not monotonically descending"};
            return out;
        }
    }
    OrderCertification shell = certify_shelling_order(c, gamma, options);
    if (shell.violation) {
        out.violation = Violation{Cond::Shelling, gamma.at(shell.violation->position), shell.violation->position,
                                  shell.violation->detail};
        return out;
    }
    std::map<Cell, Relation> cond1;
    if (auto v = first_condition(c, gamma, cond1)) {
        out.violation = v;
        return out;
    }
    detail::Budget budget(options.budget);
    ShellingSearch search(c, budget);
    std::vector<std::optional<std::size_t>> children;
    search.complete(gamma, children, 0);
    Assigner a(c, search, gamma);
    if (!a.run()) {
        out.violation = Violation{Cond::Condition2, a.stuck_, 0, "no boundary orders satisfy the second condition"};
        return out;
    }
    out.certificate = assemble(search, gamma, children, a, std::move(cond1));
    return out;
}

std::optional<RegularCertificate> search_regular(const ChainComplex& c, const SearchOptions& options)
{
    const std::vector<Cell> all = maximal_elements(c);
    detail::Budget budget(options.budget);
    ShellingSearch search(c, budget);
    std::optional<RegularCertificate> out;
    auto filter = [&](const std::vector<Cell>& placed, Cell x) {
        std::vector<Cell> earlier = non_maximal(c, x.degree);
        for (Cell p : placed)
            if (p.degree == x.degree)
                earlier.push_back(p);
        if (!covered(c, x, earlier))
            return true;
        return find_relation(c, x, earlier, false).has_value();
    };
    search.enumerate(all, {}, true, filter,
                     [&](const std::vector<Cell>& order, const std::vector<std::optional<std::size_t>>& ch) {
                         std::map<Cell, Relation> cond1;
                         if (first_condition(c, order, cond1))
                             return false;
                         Assigner a(c, search, order);
                         if (!a.run())
                             return false;
                         out = assemble(search, order, ch, a, std::move(cond1));
                         return true;
                     });
    return out;
}

bool all_generated_acyclic(const ChainComplex& c)
{
    for (unsigned v = 0; v <= c.order(); ++v)
        for (Cell e : c.cells(v))
            if (!is_acyclic(subcomplex(c, generated_subcomplex(c, e))))
                return false;
    return true;
}

bool is_totally_regular(const ChainComplex& c, const RegularCertificate& cert)
{
    if (auto v = verify_regular(c, cert))
        throw Error(ErrorKind::InvalidCertificate, "not a valid regular certificate: " + v->detail);
    return all_generated_acyclic(c);
}

std::vector<std::size_t> precritical_counts(const ChainComplex& c, const RegularCertificate& cert)
{
    std::vector<std::size_t> out;
    for (unsigned v = 0; v < cert.degree_orderings.size(); ++v) {
        std::size_t n = 0;
        for (const auto& k : classify_degree(c, DegreeOrdering{v, cert.degree_orderings[v]}))
            if (k.tag != ElementTag::Noncritical)
                ++n;
        out.push_back(n);
    }
    return out;
}

}  // namespace ccs
