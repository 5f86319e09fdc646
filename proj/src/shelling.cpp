#include "ccshell/shelling.hpp"

#include "ccshell/error.hpp"
#include "shelling_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace ccs {

namespace detail {

const CellSet& ClosureCache::operator()(Cell x)
{
    auto& slot = cache_[c_.flat(x)];
    if (!slot)
        slot = std::make_unique<CellSet>(generated_subcomplex(c_, x));
    return *slot;
}

std::optional<ShellingViolationKind> check_intersection(const ChainComplex& c, const CellSet& inter, unsigned s)
{
    if (s == 0)
        return std::nullopt;
    if (inter.none())
        return ShellingViolationKind::EmptyIntersection;
    unsigned top = 0;
    for (auto i = inter.find_first(); i != CellSet::npos; i = inter.find_next(i))
        top = std::max(top, c.cell(i).degree);
    if (top != s - 1)
        return ShellingViolationKind::WrongOrder;
    for (auto i = inter.find_first(); i != CellSet::npos; i = inter.find_next(i)) {
        Cell x = c.cell(i);
        if (x.degree == top)
            continue;
        const auto& up = c.cofaces(x);
        bool covered = std::any_of(up.begin(), up.end(), [&](Cell y) { return inter.test(c.flat(y)); });
        if (!covered)
            return ShellingViolationKind::NotPure;
    }
    return std::nullopt;
}

std::vector<Cell> part_of_degree(const ChainComplex& c, const CellSet& set, unsigned degree)
{
    std::vector<Cell> out;
    for (auto i = set.find_first(); i != CellSet::npos; i = set.find_next(i)) {
        Cell x = c.cell(i);
        if (x.degree == degree)
            out.push_back(x);
    }
    return out;
}

void Budget::tick()
{
    if (used_.fetch_add(1) + 1 > limit_)
        throw Error(ErrorKind::SearchBudgetExceeded, "search budget of " + std::to_string(limit_) + " nodes exhausted");
}

std::optional<std::size_t> ShellingSearch::node(Cell cell, std::vector<Cell> prefix)
{
    std::sort(prefix.begin(), prefix.end());
    Key key{cell, prefix};
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    const std::vector<Cell>& gamma = c_.bd(cell);
    std::optional<std::size_t> result;
    bool inside = std::all_of(prefix.begin(), prefix.end(),
                              [&](Cell p) { return std::binary_search(gamma.begin(), gamma.end(), p); });
    // An empty boundary has no shelling.
    if (inside && !gamma.empty()) {
        ShellingNode found{cell, prefix, {}, {}};
        bool ok = enumerate(gamma, prefix, false, nullptr,
                            [&](const std::vector<Cell>& order, const std::vector<std::optional<std::size_t>>& ch) {
                                found.order = order;
                                found.children = ch;
                                return true;
                            });
        if (ok) {
            nodes_.push_back(std::move(found));
            result = nodes_.size() - 1;
        }
    }
    memo_[key] = result;
    return result;
}

bool ShellingSearch::enumerate(const std::vector<Cell>& gamma, const std::vector<Cell>& prefix, bool monotone,
                               const Filter& filter, const Leaf& leaf)
{
    const std::size_t n = gamma.size();
    unsigned top = 0;
    for (Cell g : gamma)
        top = std::max(top, g.degree);
    std::vector<bool> in_prefix(n, false);
    for (std::size_t i = 0; i < n; ++i)
        in_prefix[i] = std::binary_search(prefix.begin(), prefix.end(), gamma[i]);
    const std::size_t prefix_size = prefix.size();

    std::vector<Cell> placed;
    std::vector<std::optional<std::size_t>> children;
    boost::dynamic_bitset<> used(n);
    std::set<boost::dynamic_bitset<>> dead;

    std::function<bool(const CellSet&)> dfs = [&](const CellSet& u) -> bool {
        if (placed.size() == n) {
            ++leaves_;
            return leaf(placed, children);
        }
        if (dead.count(used))
            return false;
        const std::uint64_t leaves_before = leaves_;

        struct Candidate {
            std::size_t pos;
            std::size_t overlap;
        };
        std::vector<Candidate> cands;
        for (std::size_t i = 0; i < n; ++i) {
            if (used.test(i))
                continue;
            if (placed.size() < prefix_size && !in_prefix[i])
                continue;
            if (placed.empty() && gamma[i].degree != top)
                continue;
            if (monotone && !placed.empty() && gamma[i].degree > placed.back().degree)
                continue;
            std::size_t overlap = placed.empty() ? 0 : (closures_(gamma[i]) & u).count();
            cands.push_back({i, overlap});
        }
        std::stable_sort(cands.begin(), cands.end(), [&](const Candidate& a, const Candidate& b) {
            if (gamma[a.pos].degree != gamma[b.pos].degree)
                return gamma[a.pos].degree > gamma[b.pos].degree;
            return a.overlap > b.overlap;
        });

        for (const auto& cand : cands) {
            budget_.tick();
            Cell x = gamma[cand.pos];
            std::vector<Cell> key_prefix;
            if (top > 0 && !placed.empty()) {
                CellSet inter = closures_(x) & u;
                if (check_intersection(c_, inter, x.degree))
                    continue;
                if (x.degree > 0)
                    key_prefix = part_of_degree(c_, inter, x.degree - 1);
            }
            if (filter && !filter(placed, x))
                continue;
            std::optional<std::size_t> child;
            if (top > 0 && x.degree > 0) {
                child = node(x, key_prefix);
                if (!child)
                    continue;
            }
            placed.push_back(x);
            children.push_back(child);
            used.set(cand.pos);
            bool done = dfs(u | closures_(x));
            used.reset(cand.pos);
            placed.pop_back();
            children.pop_back();
            if (done)
                return true;
        }
        if (leaves_ == leaves_before)
            dead.insert(used);
        return false;
    };
    return dfs(c_.empty_set());
}

std::optional<ShellingViolation> ShellingSearch::complete(const std::vector<Cell>& order,
                                                          std::vector<std::optional<std::size_t>>& children,
                                                          std::size_t node_id)
{
    children.assign(order.size(), std::nullopt);
    unsigned top = 0;
    for (Cell g : order)
        top = std::max(top, g.degree);
    if (top == 0)
        return std::nullopt;
    CellSet u = c_.empty_set();
    for (std::size_t j = 0; j < order.size(); ++j) {
        Cell x = order[j];
        std::vector<Cell> key_prefix;
        if (j > 0) {
            CellSet inter = closures_(x) & u;
            if (auto kind = check_intersection(c_, inter, x.degree))
                return ShellingViolation{*kind, node_id, j, x.degree, cells_of(c_, inter),
                                         "intersection with the earlier elements is not pure of order " +
                                             std::to_string(static_cast<int>(x.degree) - 1)};
            if (x.degree > 0)
                key_prefix = part_of_degree(c_, inter, x.degree - 1);
        }
        if (x.degree > 0) {
            budget_.tick();
            children[j] = node(x, key_prefix);
            if (!children[j])
                return ShellingViolation{ShellingViolationKind::NoPrefixSubShelling, node_id, j, x.degree,
                                         key_prefix, "no shelling of bd(" + c_.name(x) + ") with the prefix first"};
        }
        u |= closures_(x);
    }
    return std::nullopt;
}

void ShellingSearch::adopt(const std::vector<ShellingNode>& nodes)
{
    const std::size_t offset = nodes_.size();
    for (const auto& n : nodes) {
        ShellingNode copy = n;
        for (auto& ch : copy.children)
            if (ch)
                *ch += offset;
        nodes_.push_back(std::move(copy));
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        if (n.cell)
            memo_.emplace(Key{*n.cell, n.prefix}, offset + i);
    }
}

}  // namespace detail

namespace {

using detail::ShellingSearch;

ShellingCertificate make_certificate(std::vector<ShellingNode> nodes, std::vector<Cell> order,
                                     std::vector<std::optional<std::size_t>> children)
{
    ShellingCertificate cert;
    cert.nodes = std::move(nodes);
    cert.nodes.push_back(ShellingNode{std::nullopt, {}, std::move(order), std::move(children)});
    cert.root = cert.nodes.size() - 1;
    return compact(cert);
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedCertificate, what); }

class Verifier {
public:
    Verifier(const ChainComplex& c, const ShellingCertificate& cert) : c_(c), cert_(cert), closures_(c) {}

    std::optional<ShellingViolation> check(std::size_t idx)
    {
        if (idx >= cert_.nodes.size())
            malformed("node reference " + std::to_string(idx) + " out of range");
        if (auto it = done_.find(idx); it != done_.end())
            return it->second;
        auto result = check_node(idx);
        done_[idx] = result;
        return result;
    }

private:
    bool valid_cell(Cell x) const { return x.degree <= c_.order() && x.index < c_.rank(x.degree); }

    std::optional<ShellingViolation> check_node(std::size_t idx)
    {
        const ShellingNode& node = cert_.nodes[idx];
        std::vector<Cell> gamma;
        if (node.cell) {
            if (!valid_cell(*node.cell))
                malformed("node " + std::to_string(idx) + " names a cell outside the complex");
            gamma = c_.bd(*node.cell);
        } else {
            gamma = maximal_elements(c_);
            if (!node.prefix.empty())
                malformed("the root ordering has a prefix");
        }
        for (Cell x : node.order)
            if (!valid_cell(x))
                malformed("node " + std::to_string(idx) + " orders a cell outside the complex");
        std::vector<Cell> sorted = node.order;
        std::sort(sorted.begin(), sorted.end());
        std::sort(gamma.begin(), gamma.end());
        if (sorted != gamma)
            malformed("node " + std::to_string(idx) + " does not order the expected set");
        if (node.children.size() != node.order.size())
            malformed("node " + std::to_string(idx) + " has the wrong number of children");
        if (!std::is_sorted(node.prefix.begin(), node.prefix.end()) ||
            std::adjacent_find(node.prefix.begin(), node.prefix.end()) != node.prefix.end())
            malformed("node " + std::to_string(idx) + " has an unsorted prefix");
        for (Cell p : node.prefix)
            if (!std::binary_search(gamma.begin(), gamma.end(), p))
                malformed("node " + std::to_string(idx) + " has a prefix outside its set");

        if (node.cell && gamma.empty())
            return ShellingViolation{ShellingViolationKind::NoPrefixSubShelling, idx, 0, node.cell->degree, {},
                                     "bd(" + c_.name(*node.cell) + ") is empty and has no shelling"};
        std::vector<Cell> head(node.order.begin(),
                               node.order.begin() + static_cast<std::ptrdiff_t>(node.prefix.size()));
        std::sort(head.begin(), head.end());
        if (head != node.prefix)
            return ShellingViolation{ShellingViolationKind::NoPrefixSubShelling, idx, 0,
                                     node.order.empty() ? 0u : node.order[0].degree, node.prefix,
                                     "the prefix elements do not come first"};

        const unsigned top = node.cell ? node.cell->degree - 1 : c_.order();
        CellSet u = c_.empty_set();
        for (std::size_t j = 0; j < node.order.size(); ++j) {
            Cell x = node.order[j];
            const auto& child = node.children[j];
            if (top == 0 || x.degree == 0) {
                if (child)
                    malformed("node " + std::to_string(idx) + " has a child for an element of degree 0");
                u |= closures_(x);
                continue;
            }
            std::vector<Cell> expected;
            if (j > 0) {
                CellSet inter = closures_(x) & u;
                if (auto kind = detail::check_intersection(c_, inter, x.degree))
                    return ShellingViolation{*kind, idx, j, x.degree, cells_of(c_, inter),
                                             "intersection of the closure of " + c_.name(x) +
                                                 " with the earlier closures is not pure of order " +
                                                 std::to_string(x.degree - 1)};
                expected = detail::part_of_degree(c_, inter, x.degree - 1);
            }
            if (!child)
                return ShellingViolation{ShellingViolationKind::NoPrefixSubShelling, idx, j, x.degree, expected,
                                         "no sub-shelling given for bd(" + c_.name(x) + ")"};
            if (*child >= cert_.nodes.size())
                malformed("node reference " + std::to_string(*child) + " out of range");
            const ShellingNode& sub = cert_.nodes[*child];
            if (sub.cell != x)
                malformed("child of " + c_.name(x) + " shells a different cell");
            if (sub.prefix != expected)
                return ShellingViolation{ShellingViolationKind::NoPrefixSubShelling, idx, j, x.degree, expected,
                                         "sub-shelling of bd(" + c_.name(x) + ") has the wrong prefix"};
            if (auto v = check(*child))
                return v;
            u |= closures_(x);
        }
        return std::nullopt;
    }

    const ChainComplex& c_;
    const ShellingCertificate& cert_;
    detail::ClosureCache closures_;
    std::map<std::size_t, std::optional<ShellingViolation>> done_;
};

}  // namespace

const char* to_string(ShellingViolationKind kind)
{
    switch (kind) {
    case ShellingViolationKind::NotPure: return "NotPure";
    case ShellingViolationKind::WrongOrder: return "WrongOrder";
    case ShellingViolationKind::NoPrefixSubShelling: return "NoPrefixSubShelling";
    case ShellingViolationKind::EmptyIntersection: return "EmptyIntersection";
    }
    return "?";
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("CCSHELL_BUDGET")) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(env, &used);
            if (used == std::char_traits<char>::length(env) && v > 0)
                return v;
        } catch (...) {
        }
    }
    return 1000000;
}

std::optional<ShellingViolation> verify_shelling(const ChainComplex& c, const ShellingCertificate& cert)
{
    if (cert.root >= cert.nodes.size())
        malformed("root reference out of range");
    if (cert.nodes[cert.root].cell)
        malformed("the root node names a cell");
    return Verifier(c, cert).check(cert.root);
}

std::optional<ShellingViolation> verify_shelling_node(const ChainComplex& c, const ShellingCertificate& cert,
                                                      std::size_t node)
{
    return Verifier(c, cert).check(node);
}

std::optional<ShellingCertificate> search_shelling(const ChainComplex& c, const SearchOptions& options)
{
    const std::vector<Cell> gamma = maximal_elements(c);
    detail::Budget budget(options.budget);

    std::vector<Cell> firsts;
    for (Cell g : gamma)
        if (g.degree == c.order())
            firsts.push_back(g);

    if (options.threads <= 1 || firsts.size() <= 1 || c.order() == 0) {
        ShellingSearch search(c, budget);
        std::optional<ShellingCertificate> out;
        search.enumerate(gamma, {}, false, nullptr,
                         [&](const std::vector<Cell>& order, const std::vector<std::optional<std::size_t>>& ch) {
                             out = make_certificate(search.nodes(), order, ch);
                             return true;
                         });
        return out;
    }

    // One task per choice of the first element. The lowest successful choice
    // wins, which is the certificate the sequential search returns.
    std::vector<std::optional<ShellingCertificate>> results(firsts.size());
    std::vector<std::exception_ptr> errors(firsts.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{firsts.size()};
    auto worker = [&]() {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= firsts.size())
                return;
            if (t > best.load())
                continue;
            try {
                ShellingSearch search(c, budget);
                auto filter = [&](const std::vector<Cell>& placed, Cell x) {
                    if (best.load() < t)
                        return false;
                    return !placed.empty() || x == firsts[t];
                };
                search.enumerate(gamma, {}, false, filter,
                                 [&](const std::vector<Cell>& order,
                                     const std::vector<std::optional<std::size_t>>& ch) {
                                     results[t] = make_certificate(search.nodes(), order, ch);
                                     std::size_t b = best.load();
                                     while (t < b && !best.compare_exchange_weak(b, t)) {
                                     }
                                     return true;
                                 });
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(options.threads, static_cast<unsigned>(firsts.size()));
    for (unsigned i = 0; i < count; ++i)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    for (std::size_t t = 0; t < firsts.size(); ++t) {
        if (results[t])
            return results[t];
        if (errors[t])
            std::rethrow_exception(errors[t]);
    }
    return std::nullopt;
}

OrderCertification certify_shelling_order(const ChainComplex& c, const std::vector<Cell>& gamma,
                                          const SearchOptions& options)
{
    std::vector<Cell> sorted = gamma;
    std::vector<Cell> expected = maximal_elements(c);
    std::sort(sorted.begin(), sorted.end());
    std::sort(expected.begin(), expected.end());
    if (sorted != expected)
        throw Error(ErrorKind::InvalidInput, "the ordering is not a permutation of the maximal elements");
    detail::Budget budget(options.budget);
    ShellingSearch search(c, budget);
    std::vector<std::optional<std::size_t>> children;
    OrderCertification out;
    if (auto v = search.complete(gamma, children, 0)) {
        out.violation = v;
        return out;
    }
    out.certificate = make_certificate(search.nodes(), gamma, children);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> failures(const ShellingCertificate& cert)
{
    const auto& g = cert.gamma_order();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g[i].degree < g[j].degree)
                out.emplace_back(i, j);
    return out;
}

std::vector<ShellingCertificate> monotonize_steps(const ChainComplex& c, const ShellingCertificate& cert,
                                                  const SearchOptions& options)
{
    if (auto v = verify_shelling(c, cert))
        throw Error(ErrorKind::InvalidInput, "the certificate is not a valid shelling: " + v->detail);
    std::vector<ShellingCertificate> steps{cert};
    detail::Budget budget(options.budget);
    for (;;) {
        const ShellingCertificate& cur = steps.back();
        std::vector<Cell> order = cur.gamma_order();
        std::size_t i0 = order.size();
        for (std::size_t i = 0; i + 1 < order.size(); ++i)
            if (order[i].degree < order[i + 1].degree) {
                i0 = i;
                break;
            }
        if (i0 == order.size())
            return steps;
        std::swap(order[i0], order[i0 + 1]);
        ShellingSearch search(c, budget);
        search.adopt(cur.nodes);
        std::vector<std::optional<std::size_t>> children;
        if (auto v = search.complete(order, children, 0))
            throw Error(ErrorKind::ValidationError, "swapping positions " + std::to_string(i0) + " and " +
                                                        std::to_string(i0 + 1) + " broke the shelling: " + v->detail);
        ShellingCertificate next = make_certificate(search.nodes(), order, children);
        if (auto v = verify_shelling(c, next))
            throw Error(ErrorKind::ValidationError, "repaired certificate failed verification: " + v->detail);
        steps.push_back(std::move(next));
    }
}

ShellingCertificate monotonize(const ChainComplex& c, const ShellingCertificate& cert, const SearchOptions& options)
{
    return monotonize_steps(c, cert, options).back();
}

std::vector<Cell> segment_ordering(const ChainComplex& c, const std::vector<Cell>& upper,
                                   const std::vector<std::vector<Cell>>& boundary_orders,
                                   const std::vector<Cell>& gamma_lower)
{
    std::vector<Cell> out;
    CellSet placed = c.empty_set();
    for (std::size_t l = 0; l < upper.size(); ++l)
        for (Cell f : boundary_orders[l])
            if (!placed.test(c.flat(f))) {
                placed.set(c.flat(f));
                out.push_back(f);
            }
    for (Cell g : gamma_lower)
        if (!placed.test(c.flat(g))) {
            placed.set(c.flat(g));
            out.push_back(g);
        }
    return out;
}

ShellingCertificate skeleton_shelling(const ChainComplex& c, const ShellingCertificate& cert, unsigned i,
                                      const SearchOptions& options)
{
    if (i > c.order())
        throw Error(ErrorKind::IndexOutOfRange, "skeleton degree exceeds the order");
    if (auto v = verify_shelling(c, cert))
        throw Error(ErrorKind::InvalidInput, "the certificate is not a valid shelling: " + v->detail);
    if (!failures(cert).empty())
        throw Error(ErrorKind::InvalidInput, "the certificate is not monotonically descending");
    ShellingCertificate cur = cert;
    detail::Budget budget(options.budget);
    for (unsigned v = c.order(); v > i; --v) {
        const ShellingNode& root = cur.nodes[cur.root];
        std::vector<Cell> upper;
        std::vector<std::vector<Cell>> orders;
        std::vector<Cell> lower_gamma;
        std::vector<Cell> rest;
        for (std::size_t j = 0; j < root.order.size(); ++j) {
            Cell x = root.order[j];
            if (x.degree == v) {
                upper.push_back(x);
                orders.push_back(cur.nodes[*root.children[j]].order);
            } else if (x.degree == v - 1) {
                lower_gamma.push_back(x);
            } else {
                rest.push_back(x);
            }
        }
        std::vector<Cell> order = segment_ordering(c, upper, orders, lower_gamma);
        order.insert(order.end(), rest.begin(), rest.end());

        ChainComplex sk = skeleton(c, v - 1);
        ShellingSearch search(sk, budget);
        // Nodes of the dropped top degree are never looked up.
        search.adopt(cur.nodes);
        std::vector<std::optional<std::size_t>> children;
        if (auto bad = search.complete(order, children, 0))
            throw Error(ErrorKind::ValidationError, "segment ordering of degree " + std::to_string(v - 1) +
                                                        " is not a shelling: " + bad->detail);
        cur = make_certificate(search.nodes(), order, children);
        if (auto bad = verify_shelling(sk, cur))
            throw Error(ErrorKind::ValidationError, "skeleton certificate failed verification: " + bad->detail);
    }
    return cur;
}

ShellingCertificate compact(const ShellingCertificate& cert, std::vector<std::size_t>* keep)
{
    const std::size_t n = cert.nodes.size();
    std::vector<bool> live(n, false);
    std::vector<std::size_t> stack{cert.root};
    if (keep)
        stack.insert(stack.end(), keep->begin(), keep->end());
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        if (i >= n || live[i])
            continue;
        live[i] = true;
        for (const auto& ch : cert.nodes[i].children)
            if (ch)
                stack.push_back(*ch);
    }
    std::vector<std::size_t> remap(n, 0);
    ShellingCertificate out;
    for (std::size_t i = 0; i < n; ++i)
        if (live[i]) {
            remap[i] = out.nodes.size();
            out.nodes.push_back(cert.nodes[i]);
        }
    for (auto& node : out.nodes)
        for (auto& ch : node.children)
            if (ch)
                ch = remap[*ch];
    out.root = remap[cert.root];
    if (keep)
        for (auto& k : *keep)
            k = remap[k];
    return out;
}

}  // namespace ccs
