#pragma once

#include "ccshell/shelling.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <set>

namespace ccs::detail {

// Closures of single elements, computed on demand.
class ClosureCache {
public:
    explicit ClosureCache(const ChainComplex& c) : c_(c), cache_(c.size()) {}

    const CellSet& operator()(Cell x);

private:
    const ChainComplex& c_;
    std::vector<std::unique_ptr<CellSet>> cache_;
};

// Why the intersection with the earlier closures fails to generate a pure
// complex of order s - 1.
std::optional<ShellingViolationKind> check_intersection(const ChainComplex& c, const CellSet& inter, unsigned s);

// Elements of the given degree inside a set, in basis order.
std::vector<Cell> part_of_degree(const ChainComplex& c, const CellSet& set, unsigned degree);

// Shared node budget. Several searches may draw from one counter.
class Budget {
public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}
    void tick();
    std::uint64_t used() const { return used_.load(); }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

// Backtracking over shelling orders with memoized sub-shellings.
class ShellingSearch {
public:
    using Filter = std::function<bool(const std::vector<Cell>& placed, Cell next)>;
    using Leaf = std::function<bool(const std::vector<Cell>& order,
                                    const std::vector<std::optional<std::size_t>>& children)>;

    ShellingSearch(const ChainComplex& c, Budget& budget) : c_(c), closures_(c), budget_(budget) {}

    // Node shelling bd(cell) with the given prefix first; searched once per key.
    std::optional<std::size_t> node(Cell cell, std::vector<Cell> prefix);

    // Walks the valid orders of `gamma` starting with the prefix set and calls
    // `leaf` on each until it returns true. `filter` may veto a placement; it
    // must depend only on the set of placed elements.
    bool enumerate(const std::vector<Cell>& gamma, const std::vector<Cell>& prefix, bool monotone,
                   const Filter& filter, const Leaf& leaf);

    // Children for a fixed ordering of `gamma`, or the first violation.
    std::optional<ShellingViolation> complete(const std::vector<Cell>& order,
                                              std::vector<std::optional<std::size_t>>& children,
                                              std::size_t node_id);

    // Registers nodes of a certificate known to be valid so they are reused.
    void adopt(const std::vector<ShellingNode>& nodes);

    std::vector<ShellingNode>& nodes() { return nodes_; }
    ClosureCache& closures() { return closures_; }

private:
    using Key = std::pair<Cell, std::vector<Cell>>;

    const ChainComplex& c_;
    ClosureCache closures_;
    Budget& budget_;
    std::vector<ShellingNode> nodes_;
    std::map<Key, std::optional<std::size_t>> memo_;
    std::uint64_t leaves_ = 0;
};

}  // namespace ccs::detail
