#ifndef ROMANDOM_GRAPH_HPP
#define ROMANDOM_GRAPH_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace romandom {

// Malformed input document. Line numbers are 1-based; 0 means the error is
// about the document as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Undirected simple graph over dense vertex ids [0, n). Adjacency lists are
// sorted and deduplicated at construction; instances are immutable afterwards.
// Display names are optional metadata and never affect structure.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
          std::vector<std::string> names = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_names() const { return !names_.empty(); }
    // Display name if set, otherwise the id rendered as text.
    std::string display_name(int v) const;

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_;
};

// Total assignment V -> {0, 1, 2}. The constructor and set() reject any other
// value, so a Labeling is well-formed by construction.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<int> labels);
    static Labeling zeros(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    int operator[](int v) const { return labels_[v]; }
    void set(int v, int value);
    const std::vector<int>& labels() const { return labels_; }

    bool operator==(const Labeling&) const = default;

private:
    std::vector<int> labels_;
};

enum class Method { formula, construction, tree_dp, brute_force };
const char* method_name(Method m);

struct SolveResult {
    int gamma = 0;
    Labeling labeling;
    Method method = Method::tree_dp;
    long long nodes_explored = 0;  // 0 when not applicable
};

// The label classes V0, V1, V2 as disjoint id sets (ascending ids).
struct Partition {
    std::vector<int> v0, v1, v2;
};

int weight(const Labeling& f);
Partition partition(const Labeling& f);

// True iff every vertex labeled 0 has at least one neighbor labeled 2.
// Throws std::invalid_argument when the labeling length does not match.
bool is_valid_rdf(const Graph& g, const Labeling& f);

// Connected with exactly n-1 edges, n >= 1. The empty graph is not a tree.
bool is_tree(const Graph& g);

// Edge-list text: one "u v" pair per line; blank lines and '#' comments
// allowed; an optional "n <count>" header declares isolated vertices. The
// vertex count is max id + 1 or the declared count, whichever is larger.
Graph from_edge_list(std::istream& in);
Graph from_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Labeling interchange text: one "id label" pair per line, same comment
// rules. Every id in [0, max id] must appear exactly once.
Labeling labeling_from_text(std::istream& in);
Labeling labeling_from_text(const std::string& text);
std::string labeling_to_text(const Labeling& f);

}  // namespace romandom

#endif
