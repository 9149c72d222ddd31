#include "romandom/families.hpp"

#include <charconv>

namespace romandom {

namespace {

int parse_param(const std::string& tok, const std::string& text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(0, "bad family spec '" + text + "': '" + tok + "' is not an integer");
    return value;
}

std::vector<int> parse_params(const std::string& body, size_t count, const std::string& text) {
    std::vector<int> out;
    size_t start = 0;
    while (true) {
        size_t comma = body.find(',', start);
        out.push_back(parse_param(body.substr(start, comma - start), text));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != count)
        throw ParseError(0, "bad family spec '" + text + "': expected " + std::to_string(count) +
                                " parameters, got " + std::to_string(out.size()));
    return out;
}

}  // namespace

FamilySpec FamilySpec::comet(int t, int r) {
    FamilySpec s;
    s.kind = Family::comet;
    s.t = t;
    s.r = r;
    return s;
}

FamilySpec FamilySpec::double_comet(int n, int a, int b) {
    FamilySpec s;
    s.kind = Family::double_comet;
    s.n = n;
    s.a = a;
    s.b = b;
    return s;
}

FamilySpec FamilySpec::comb(int n) {
    FamilySpec s;
    s.kind = Family::comb;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError(0, "bad family spec '" + text + "': expected 'family:params'");
    const std::string tag = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    FamilySpec s;
    if (tag == "comet") {
        auto p = parse_params(body, 2, text);
        s = comet(p[0], p[1]);
    } else if (tag == "dcomet") {
        auto p = parse_params(body, 3, text);
        s = double_comet(p[0], p[1], p[2]);
    } else if (tag == "comb") {
        auto p = parse_params(body, 1, text);
        s = comb(p[0]);
    } else {
        throw ParseError(0, "unknown family '" + tag + "' (expected comet, dcomet, or comb)");
    }
    s.validate();
    return s;
}

std::string FamilySpec::to_text() const {
    switch (kind) {
        case Family::comet:
            return "comet:" + std::to_string(t) + "," + std::to_string(r);
        case Family::double_comet:
            return "dcomet:" + std::to_string(n) + "," + std::to_string(a) + "," +
                   std::to_string(b);
        case Family::comb:
            return "comb:" + std::to_string(n);
    }
    return "?";
}

int FamilySpec::vertex_count() const {
    switch (kind) {
        case Family::comet: return t + r;
        case Family::double_comet: return n;
        case Family::comb: return 2 * n;
    }
    return 0;
}

int FamilySpec::spine_length() const {
    switch (kind) {
        case Family::comet: return t;
        case Family::double_comet: return n - a - b;
        case Family::comb: return n;
    }
    return 0;
}

void FamilySpec::validate() const {
    switch (kind) {
        case Family::comet:
            if (t < 2) throw std::domain_error("comet requires t >= 2");
            if (r < 1) throw std::domain_error("comet requires r >= 1");
            break;
        case Family::double_comet:
            if (a < 1 || b < 1) throw std::domain_error("double comet requires a, b >= 1");
            if (n < a + b + 2) throw std::domain_error("double comet requires n >= a + b + 2");
            break;
        case Family::comb:
            if (n < 1) throw std::domain_error("comb requires n >= 1");
            break;
    }
}

Graph gen_comet(int t, int r) {
    FamilySpec::comet(t, r).validate();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(t + r - 1));
    for (int i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1);
    for (int j = 0; j < r; ++j) edges.emplace_back(0, t + j);
    std::vector<std::string> names(static_cast<size_t>(t + r));
    for (int i = 0; i < t; ++i) names[i] = "v_" + std::to_string(i + 1);
    for (int j = 0; j < r; ++j) names[t + j] = "u_" + std::to_string(j + 1);
    return Graph(t + r, edges, std::move(names));
}

Graph gen_double_comet(int n, int a, int b) {
    FamilySpec::double_comet(n, a, b).validate();
    const int p = n - a - b;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
    for (int j = 0; j < a; ++j) edges.emplace_back(0, p + j);
    for (int j = 0; j < b; ++j) edges.emplace_back(p - 1, p + a + j);
    std::vector<std::string> names(static_cast<size_t>(n));
    for (int i = 0; i < p; ++i) names[i] = "k_" + std::to_string(i + 1);
    for (int j = 0; j < a; ++j) names[p + j] = "u_" + std::to_string(j + 1);
    for (int j = 0; j < b; ++j) names[p + a + j] = "v_" + std::to_string(j + 1);
    return Graph(n, edges, std::move(names));
}

Graph gen_comb(int n) {
    FamilySpec::comb(n).validate();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(2 * n - 1));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    std::vector<std::string> names(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        names[i] = "v_" + std::to_string(i + 1);
        names[n + i] = "v_" + std::to_string(i + 1) + "+";
    }
    return Graph(2 * n, edges, std::move(names));
}

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::comet: return gen_comet(spec.t, spec.r);
        case Family::double_comet: return gen_double_comet(spec.n, spec.a, spec.b);
        case Family::comb: return gen_comb(spec.n);
    }
    throw std::domain_error("unknown family kind");
}

}  // namespace romandom
