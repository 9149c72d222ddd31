#include "romandom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace romandom {

namespace {

// Ids above this are almost certainly typos; rejecting them keeps a stray
// token from turning into a multi-gigabyte allocation.
constexpr long long kMaxVertexId = 100'000'000;

long long parse_int(const std::string& tok, int line, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

// Strips '#' comments and a trailing CR, then splits on whitespace.
std::vector<std::string> tokenize(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> toks;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) toks.push_back(tok);
    return toks;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
             std::vector<std::string> names)
    : n_(n), adj_(static_cast<size_t>(std::max(n, 0))), names_(std::move(names)) {
    if (n < 0) throw std::domain_error("vertex count must be non-negative");
    if (!names_.empty() && static_cast<int>(names_.size()) != n)
        throw std::invalid_argument("names must be empty or cover every vertex");
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::domain_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") out of range for " + std::to_string(n) + " vertices");
        if (u == v) throw std::domain_error("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    long long twice_m = 0;
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        twice_m += static_cast<long long>(list.size());
    }
    m_ = static_cast<int>(twice_m / 2);
}

std::string Graph::display_name(int v) const {
    return names_.empty() ? std::to_string(v) : names_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    for (int x : labels_)
        if (x < 0 || x > 2)
            throw std::domain_error("label must be 0, 1, or 2; got " + std::to_string(x));
}

Labeling Labeling::zeros(int n) {
    Labeling f;
    f.labels_.assign(static_cast<size_t>(std::max(n, 0)), 0);
    return f;
}

void Labeling::set(int v, int value) {
    if (value < 0 || value > 2)
        throw std::domain_error("label must be 0, 1, or 2; got " + std::to_string(value));
    labels_[static_cast<size_t>(v)] = value;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::formula: return "formula";
        case Method::construction: return "construction";
        case Method::tree_dp: return "tree-dp";
        case Method::brute_force: return "brute";
    }
    return "?";
}

int weight(const Labeling& f) {
    int w = 0;
    for (int x : f.labels()) w += x;
    return w;
}

Partition partition(const Labeling& f) {
    Partition p;
    for (int v = 0; v < f.size(); ++v) {
        if (f[v] == 0) p.v0.push_back(v);
        else if (f[v] == 1) p.v1.push_back(v);
        else p.v2.push_back(v);
    }
    return p;
}

bool is_valid_rdf(const Graph& g, const Labeling& f) {
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("labeling length " + std::to_string(f.size()) +
                                    " does not match vertex count " +
                                    std::to_string(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f[v] != 0) continue;
        bool guarded = false;
        for (int u : g.neighbors(v)) {
            if (f[u] == 2) {
                guarded = true;
                break;
            }
        }
        if (!guarded) return false;
    }
    return true;
}

bool is_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || g.edge_count() != n - 1) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

Graph from_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long declared = -1;
    long long max_id = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "n") {
            if (toks.size() != 2)
                throw ParseError(lineno, "header must be 'n <count>'");
            long long count = parse_int(toks[1], lineno, "vertex count");
            if (count < 0) throw ParseError(lineno, "vertex count must be non-negative");
            if (count > kMaxVertexId + 1) throw ParseError(lineno, "vertex count too large");
            declared = std::max(declared, count);
            continue;
        }
        if (toks.size() != 2) throw ParseError(lineno, "expected 'u v'");
        long long u = parse_int(toks[0], lineno, "vertex id");
        long long v = parse_int(toks[1], lineno, "vertex id");
        if (u < 0 || v < 0)
            throw ParseError(lineno, "negative vertex id");
        if (u > kMaxVertexId || v > kMaxVertexId)
            throw ParseError(lineno, "vertex id too large");
        if (u == v)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, u, v});
    }
    long long n = std::max(declared, max_id + 1);
    return Graph(static_cast<int>(std::max(n, 0LL)), edges);
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Labeling labeling_from_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long max_id = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw ParseError(lineno, "expected 'id label'");
        long long id = parse_int(toks[0], lineno, "vertex id");
        long long label = parse_int(toks[1], lineno, "label");
        if (id < 0) throw ParseError(lineno, "negative vertex id");
        if (id > kMaxVertexId) throw ParseError(lineno, "vertex id too large");
        if (label < 0 || label > 2)
            throw ParseError(lineno, "label must be 0, 1, or 2");
        pairs.emplace_back(static_cast<int>(id), static_cast<int>(label));
        max_id = std::max(max_id, id);
    }
    std::vector<int> labels(static_cast<size_t>(max_id + 1), -1);
    for (auto [id, label] : pairs) {
        if (labels[static_cast<size_t>(id)] != -1)
            throw ParseError(0, "vertex " + std::to_string(id) + " labeled twice");
        labels[static_cast<size_t>(id)] = label;
    }
    for (size_t id = 0; id < labels.size(); ++id)
        if (labels[id] == -1)
            throw ParseError(0, "no label for vertex " + std::to_string(id));
    return Labeling(std::move(labels));
}

Labeling labeling_from_text(const std::string& text) {
    std::istringstream in(text);
    return labeling_from_text(in);
}

std::string labeling_to_text(const Labeling& f) {
    std::ostringstream out;
    for (int v = 0; v < f.size(); ++v) out << v << " " << f[v] << "\n";
    return out.str();
}

}  // namespace romandom
