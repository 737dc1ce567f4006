#include "twoclub/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "twoclub/reduction.hpp"
#include "twoclub/rng.hpp"

namespace twoclub {

ParseError::ParseError(int line_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}

namespace {

int parse_int(const std::string& token, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + token + "'");
    return value;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    int n = -1, declared_edges = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::map<int, std::string> names;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::vector<std::string> tok = tokenize(raw);
        if (tok.empty()) continue;
        if (tok[0] == "c") {
            if (tok.size() >= 2 && tok[1] == "label") {
                if (tok.size() != 4) throw ParseError(line, "label line needs 'c label <i> <name>'");
                int i = parse_int(tok[2], line, "label vertex");
                if (i < 1) throw ParseError(line, "label vertex must be positive");
                if (!names.emplace(i, tok[3]).second)
                    throw ParseError(line, "duplicate label for vertex " + tok[2]);
            }
            continue;
        }
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError(line, "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "edge")
                throw ParseError(line, "problem line needs 'p edge <n> <m>'");
            n = parse_int(tok[2], line, "vertex count");
            declared_edges = parse_int(tok[3], line, "edge count");
            if (n < 0 || declared_edges < 0) throw ParseError(line, "counts must be nonnegative");
            continue;
        }
        if (tok[0] == "e") {
            if (n < 0) throw ParseError(line, "edge before problem line");
            if (tok.size() != 3) throw ParseError(line, "edge line needs 'e <u> <v>'");
            int u = parse_int(tok[1], line, "endpoint");
            int v = parse_int(tok[2], line, "endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line, "endpoint out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line, "self-loop");
            Edge e(u - 1, v - 1);
            if (!seen.insert(e).second) throw ParseError(line, "duplicate edge");
            edges.push_back(e);
            continue;
        }
        throw ParseError(line, "unknown line type '" + tok[0] + "'");
    }
    if (n < 0) throw ParseError(line, "missing problem line");
    if (static_cast<int>(edges.size()) != declared_edges)
        throw ParseError(line, "problem line declares " + std::to_string(declared_edges) +
                                   " edges, file has " + std::to_string(edges.size()));
    std::vector<std::string> labels;
    if (!names.empty()) {
        if (names.rbegin()->first > n)
            throw ParseError(line, "label for vertex " + std::to_string(names.rbegin()->first) +
                                       " out of range");
        labels.resize(n);
        for (int i = 0; i < n; ++i) {
            auto it = names.find(i + 1);
            labels[i] = it != names.end() ? it->second : std::to_string(i + 1);
        }
    }
    return make_graph(n, edges, std::move(labels));
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v)
            out << "c label " << v + 1 << ' ' << g.label(v) << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << write_graph(g);
}

Graph gen_random(int n, double p, unsigned long long seed) {
    if (n < 0) throw std::invalid_argument("gen_random: negative vertex count");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_random: p outside [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

Graph gen_planted(int clubs, int club_size, int noise, unsigned long long seed) {
    if (clubs < 1 || club_size < 2) throw std::invalid_argument("gen_planted: need clubs >= 1, club_size >= 2");
    if (noise < 0) throw std::invalid_argument("gen_planted: negative noise");
    const int n = clubs * club_size;
    const long long intra = static_cast<long long>(clubs) * club_size * (club_size - 1) / 2;
    const long long inter = static_cast<long long>(n) * (n - 1) / 2 - intra;
    if (noise > inter) throw std::invalid_argument("gen_planted: more noise edges than cross pairs");

    Rng rng(seed);
    std::vector<Edge> edges;
    std::set<Edge> present;
    auto put = [&](int u, int v) {
        Edge e(u, v);
        if (present.insert(e).second) edges.push_back(e);
    };
    for (int c = 0; c < clubs; ++c) {
        const int base = c * club_size;
        for (int j = 1; j < club_size; ++j) put(base, base + j);
        for (int j = 1; j < club_size; ++j)
            for (int l = j + 1; l < club_size; ++l)
                if (rng.unit() < 0.5) put(base + j, base + l);
    }
    int added = 0;
    while (added < noise) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v || u / club_size == v / club_size) continue;
        Edge e(u, v);
        if (!present.insert(e).second) continue;
        edges.push_back(e);
        ++added;
    }
    return make_graph(n, edges);
}

Graph case_gadget(CaseId id) {
    switch (id) {
        case CaseId::Case1:
            return make_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
        case CaseId::Case2:
            return make_graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}});
        case CaseId::Case3:
            return make_graph(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {3, 4}});
        case CaseId::Case41:
            return make_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {3, 5}});
        case CaseId::Case421:
            return make_graph(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {3, 5},
                                                   {0, 6}, {6, 7}, {2, 7}, {6, 5}});
        case CaseId::Case422:
            return make_graph(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {3, 5},
                                                   {0, 6}, {1, 6}, {6, 5}});
        case CaseId::FallbackGeneric:
            return make_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}, {0, 5}, {5, 4}});
    }
    throw std::invalid_argument("case_gadget: unknown case");
}

Graph tail_gadget() {
    return make_graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}});
}

Graph gen_case_fixture(CaseId id, unsigned long long seed) {
    const Graph base = case_gadget(id);
    const int n0 = base.vertex_count();
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Edge> edges = base.edges();
        std::set<Edge> present(edges.begin(), edges.end());
        auto put = [&](int u, int v) {
            if (u == v) return;
            Edge e(u, v);
            if (present.insert(e).second) edges.push_back(e);
        };
        const int extra = 1 + rng.below(2);
        const int n = n0 + extra;
        for (int v = n0; v < n; ++v) {
            int stubs = 1 + rng.below(2);
            for (int s = 0; s < stubs; ++s) put(v, rng.below(v));
        }
        if (rng.below(5) < 2) put(rng.below(n0), rng.below(n0));

        Graph g = make_graph(n, edges);
        if (rule3_strip_two_club_components({g, 0}).changed) continue;
        if (rule5_resolve_degree_two_components({g, 0}).changed) continue;
        if (rule6_three_tail({g, 0}).changed) continue;
        if (detect_case(g).id != id) continue;
        return g;
    }
    return base;
}

}  // namespace twoclub
