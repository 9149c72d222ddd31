#ifndef ROMANDOM_SOLVERS_HPP
#define ROMANDOM_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "romandom/graph.hpp"

namespace romandom {

class NotATreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& msg, std::optional<SolveResult> best)
        : std::runtime_error(msg), incumbent(std::move(best)) {}

    // Best solution found before the budget ran out, if any.
    std::optional<SolveResult> incumbent;
};

// Minimal partial weights of the four states of a vertex in a rooted tree:
//   w2  -- labeled 2, subtree fully satisfied
//   w1  -- labeled 1, subtree fully satisfied
//   w0d -- labeled 0, dominated by a child labeled 2
//   w0u -- labeled 0, not yet dominated (the parent must take label 2)
// kInf marks impossible states (w0d at a leaf); additions saturate at kInf.
struct DpStateTable {
    static constexpr std::int64_t kInf = std::int64_t{1} << 60;

    std::vector<int> order;   // breadth-first preorder from the root
    std::vector<int> parent;  // -1 at the root
    std::vector<std::int64_t> w2, w1, w0d, w0u;
    // Least-id child whose upgrade to label 2 realizes w0d; -1 at leaves.
    std::vector<int> upgrade_child;
};

DpStateTable compute_dp_table(const Graph& g, int root = 0);

// Exact gamma_R for trees in linear time, iterative throughout (safe on
// path-like trees of any depth). gamma is root-independent; the default
// root 0 makes the returned labeling deterministic.
SolveResult solve_tree_dp(const Graph& g, int root = 0);

struct BruteOptions {
    std::optional<long long> node_budget;  // assignments tried before giving up
    bool prune = true;  // false = plain exhaustive enumeration (debug)
};

// Exact gamma_R on arbitrary graphs: depth-first label assignment in vertex
// id order with branch-and-bound. Returns the lexicographically least
// optimal labeling under label order 0 < 1 < 2. Intended for graphs of
// roughly 20 vertices or fewer.
SolveResult solve_brute(const Graph& g, const BruteOptions& opts = {});

// Uniform random labeled tree via Pruefer-sequence decode; the same
// (n, seed) always yields the same tree.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace romandom

#endif
